#!/usr/bin/env python3
"""Reference scorer for the lexicon-and-rules sentence pipeline.

A line-by-line port of the published VADER rule set (Hutto & Gilbert 2014),
minus the emoji and idiom special cases, reading the lexicon and bad-words
files shipped under resources/. It exists to generate frozen expected
values for the C++ implementation's golden tests, so it must stay
independent of that implementation.
"""

import math
import string
import sys
from pathlib import Path

B_INCR = 0.293
B_DECR = -0.293
C_INCR = 0.733
N_SCALAR = -0.74

NEGATE = {
    "aint", "arent", "cannot", "cant", "couldnt", "darent", "didnt", "doesnt",
    "ain't", "aren't", "can't", "couldn't", "daren't", "didn't", "doesn't",
    "dont", "hadnt", "hasnt", "havent", "isnt", "mightnt", "mustnt", "neither",
    "don't", "hadn't", "hasn't", "haven't", "isn't", "mightn't", "mustn't",
    "neednt", "needn't", "never", "none", "nope", "nor", "not", "nothing",
    "nowhere", "oughtnt", "shant", "shouldnt", "uhuh", "wasnt", "werent",
    "oughtn't", "shan't", "shouldn't", "uh-uh", "wasn't", "weren't",
    "without", "wont", "wouldnt", "won't", "wouldn't", "rarely", "seldom",
    "despite",
}

BOOSTER_DICT = {
    "absolutely": B_INCR, "amazingly": B_INCR, "awfully": B_INCR,
    "completely": B_INCR, "considerable": B_INCR, "considerably": B_INCR,
    "decidedly": B_INCR, "deeply": B_INCR, "effing": B_INCR,
    "enormous": B_INCR, "enormously": B_INCR, "entirely": B_INCR,
    "especially": B_INCR, "exceptional": B_INCR, "exceptionally": B_INCR,
    "extreme": B_INCR, "extremely": B_INCR, "fabulously": B_INCR,
    "flipping": B_INCR, "flippin": B_INCR, "frickin": B_INCR,
    "fricking": B_INCR, "friggin": B_INCR, "frigging": B_INCR,
    "fully": B_INCR, "fuckin": B_INCR, "fucking": B_INCR,
    "greatly": B_INCR, "hella": B_INCR, "highly": B_INCR, "hugely": B_INCR,
    "incredible": B_INCR, "incredibly": B_INCR, "intensely": B_INCR,
    "major": B_INCR, "majorly": B_INCR, "more": B_INCR, "most": B_INCR,
    "particularly": B_INCR, "purely": B_INCR, "quite": B_INCR,
    "really": B_INCR, "remarkably": B_INCR, "so": B_INCR,
    "substantially": B_INCR, "thoroughly": B_INCR, "total": B_INCR,
    "totally": B_INCR, "tremendous": B_INCR, "tremendously": B_INCR,
    "uber": B_INCR, "unbelievably": B_INCR, "unusually": B_INCR,
    "utter": B_INCR, "utterly": B_INCR, "very": B_INCR,
    "almost": B_DECR, "barely": B_DECR, "hardly": B_DECR,
    "just enough": B_DECR, "kind of": B_DECR, "kinda": B_DECR,
    "kindof": B_DECR, "kind-of": B_DECR, "less": B_DECR, "little": B_DECR,
    "marginal": B_DECR, "marginally": B_DECR, "occasional": B_DECR,
    "occasionally": B_DECR, "partly": B_DECR, "scarce": B_DECR,
    "scarcely": B_DECR, "slight": B_DECR, "slightly": B_DECR,
    "somewhat": B_DECR, "sort of": B_DECR, "sorta": B_DECR,
    "sortof": B_DECR, "sort-of": B_DECR,
}


def load_lexicon(path):
    lex = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        token, value = line.split("\t")[:2]
        lex[token.strip().lower()] = float(value)
    return lex


def load_wordlist(path):
    out = set()
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        word = line.strip().lower()
        if word and not word.startswith("#"):
            out.add(word)
    return out


def rule_tokens(text):
    tokens = []
    for word in text.split():
        stripped = word.strip(string.punctuation)
        tokens.append(word if len(stripped) <= 2 else stripped)
    return tokens


def is_upper(token):
    has_alpha = any(c.isalpha() for c in token)
    return has_alpha and all(c.isupper() for c in token if c.isalpha())


def all_cap_differential(tokens):
    caps = sum(1 for t in tokens if is_upper(t))
    return 0 < caps < len(tokens)


def negated(word):
    return word in NEGATE or "n't" in word


def normalize(score, alpha=15.0):
    norm = score / math.sqrt(score * score + alpha)
    return max(-1.0, min(1.0, norm))


def scalar_inc_dec(token, valence, cap_diff):
    lower = token.lower()
    if lower not in BOOSTER_DICT:
        return 0.0
    scalar = BOOSTER_DICT[lower]
    if valence < 0:
        scalar = -scalar
    if is_upper(token) and cap_diff:
        scalar += C_INCR if valence > 0 else -C_INCR
    return scalar


def negation_check(valence, lower, back, i):
    if back == 0:
        if negated(lower[i - 1]):
            valence *= N_SCALAR
    elif back == 1:
        if lower[i - 2] == "never" and lower[i - 1] in ("so", "this"):
            valence *= 1.25
        elif lower[i - 2] == "without" and lower[i - 1] == "doubt":
            pass
        elif negated(lower[i - 2]):
            valence *= N_SCALAR
    elif back == 2:
        if lower[i - 3] == "never" and (
            lower[i - 2] in ("so", "this") or lower[i - 1] in ("so", "this")
        ):
            valence *= 1.25
        elif lower[i - 3] == "without" and "doubt" in (lower[i - 2], lower[i - 1]):
            pass
        elif negated(lower[i - 3]):
            valence *= N_SCALAR
    return valence


def booster_bigram_check(valence, lower, i):
    two_one = f"{lower[i-2]} {lower[i-1]}"
    three_two = f"{lower[i-3]} {lower[i-2]}"
    three_two_one = f"{lower[i-3]} {two_one}"
    for gram in (three_two_one, three_two, two_one):
        if gram in BOOSTER_DICT:
            valence += BOOSTER_DICT[gram]
    return valence


def least_check(valence, lower, i, lexicon):
    if i > 1 and lower[i - 1] not in lexicon and lower[i - 1] == "least":
        if lower[i - 2] not in ("at", "very"):
            valence *= N_SCALAR
    elif i > 0 and lower[i - 1] not in lexicon and lower[i - 1] == "least":
        valence *= N_SCALAR
    return valence


def punctuation_emphasis(text):
    ep = min(text.count("!"), 4) * 0.292
    qm = text.count("?")
    if qm > 1:
        ep += qm * 0.18 if qm <= 3 else 0.96
    return ep


def token_valence(tokens, lower, i, cap_diff, lexicon):
    if lower[i] not in lexicon:
        return 0.0
    raw = lexicon[lower[i]]
    valence = raw
    if lower[i] == "no" and i + 1 < len(tokens) and lower[i + 1] in lexicon:
        valence = 0.0
    if (
        (i > 0 and lower[i - 1] == "no")
        or (i > 1 and lower[i - 2] == "no")
        or (i > 2 and lower[i - 3] == "no" and lower[i - 1] in ("or", "nor"))
    ):
        valence = raw * N_SCALAR
    if is_upper(tokens[i]) and cap_diff:
        valence += C_INCR if valence > 0 else -C_INCR
    for back in range(3):
        if i <= back:
            continue
        j = i - back - 1
        if lower[j] in lexicon:
            continue
        s = scalar_inc_dec(tokens[j], valence, cap_diff)
        if back == 1 and s != 0:
            s *= 0.95
        if back == 2 and s != 0:
            s *= 0.90
        valence += s
        valence = negation_check(valence, lower, back, i)
        if back == 2:
            valence = booster_bigram_check(valence, lower, i)
    return least_check(valence, lower, i, lexicon)


def score_sentence(text, lexicon, bad_words):
    tokens = rule_tokens(text)
    if not tokens:
        return {"pos": 0.0, "neu": 1.0, "neg": 0.0, "compound": 0.0, "forced": False}
    lower = [t.lower() for t in tokens]
    cap_diff = all_cap_differential(tokens)

    sentiments = []
    for i in range(len(tokens)):
        if lower[i] in BOOSTER_DICT:
            sentiments.append(0.0)
            continue
        if i + 1 < len(tokens) and lower[i] == "kind" and lower[i + 1] == "of":
            sentiments.append(0.0)
            continue
        sentiments.append(token_valence(tokens, lower, i, cap_diff, lexicon))

    if "but" in lower:
        bi = lower.index("but")
        sentiments = [
            s * (0.5 if i < bi else 1.5 if i > bi else 1.0)
            for i, s in enumerate(sentiments)
        ]

    total = sum(sentiments)
    punct = punctuation_emphasis(text)
    if total > 0:
        total += punct
    elif total < 0:
        total -= punct
    compound = normalize(total)

    pos_sum = sum(s + 1.0 for s in sentiments if s > 0)
    neg_sum = sum(s - 1.0 for s in sentiments if s < 0)
    neu_count = sum(1 for s in sentiments if s == 0)
    if pos_sum > abs(neg_sum):
        pos_sum += punct
    elif pos_sum < abs(neg_sum):
        neg_sum -= punct
    mass = pos_sum + abs(neg_sum) + neu_count

    forced = any(t in bad_words for t in lower)
    return {
        "pos": abs(pos_sum / mass),
        "neu": neu_count / mass,
        "neg": abs(neg_sum / mass),
        "compound": -1.0 if forced else compound,
        "forced": forced,
    }


def main():
    resources = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("resources")
    lexicon = load_lexicon(resources / "sentiment_lexicon.txt")
    bad_words = load_wordlist(resources / "bad_words.txt")
    for line in sys.stdin:
        line = line.rstrip("\n")
        if line:
            s = score_sentence(line, lexicon, bad_words)
            print(f"{line}\t{s['compound']:.10f}")


if __name__ == "__main__":
    main()
