#!/usr/bin/env python3
"""Independent Python walk of the whole feature pipeline.

Recomputes every stage (whitespace normalization, sentence splitting, word
tokenization, stopword removal, dictionary-guarded lemmatization, sentence
and word scoring, the 14 features) from the shipped resource files, without
touching the C++ code. Used to freeze tests/mini_book_expected.csv.

Usage: python3 scripts/feature_oracle.py <book.txt> [resources_dir]
"""

import re
import sys
from pathlib import Path

from sentiment_oracle import load_lexicon, load_wordlist, score_sentence

VOWELS = set("aeiou")


def normalize_whitespace(text):
    return re.sub(r"\s+", " ", text, flags=re.UNICODE).strip()


def split_sentences(text, abbreviations):
    sentences = []
    start = 0
    i = 0
    closers = set("\"')]”’»")
    while i < len(text):
        if text[i] not in ".!?":
            i += 1
            continue
        term_begin = i
        dots = 0
        bang = False
        while i < len(text) and text[i] in ".!?":
            if text[i] == ".":
                dots += 1
            else:
                bang = True
            i += 1
        while i < len(text) and text[i] in closers:
            i += 1
        if i >= len(text) or text[i] != " " or i + 1 >= len(text):
            continue
        nxt = text[i + 1]
        ellipsis = dots >= 2 and not bang
        ok = nxt.isupper() if ellipsis else (nxt.isupper() or nxt.isdigit())
        if not ok:
            continue
        if dots == 1 and not bang:
            b = term_begin
            while b > 0 and text[b - 1].isalpha():
                b -= 1
            before = text[b:term_begin]
            if (len(before) == 1 and before.isupper()) or before.lower() in abbreviations:
                continue
        seg = text[start:i].strip()
        if seg:
            sentences.append(seg)
        start = i + 1
        i += 1
    seg = text[start:].strip()
    if seg:
        sentences.append(seg)
    return sentences


TOKEN_RE = re.compile(r"[^\W\d_]+(?:['’-][^\W\d_]+)*", re.UNICODE)


def tokenize_words(text):
    return [t.lower().replace("’", "'") for t in TOKEN_RE.findall(text)]


def lemmatize(w, exceptions, dictionary):
    if w in exceptions:
        return exceptions[w]
    n = len(w)
    if n >= 5 and w.endswith("ies"):
        return w[:-3] + "y"
    if n >= 5 and w.endswith("sses"):
        return w[:-2]
    if not w.endswith(("ss", "us")) and n >= 4 and w.endswith("s"):
        if w.endswith("es") and len(w[:-2]) >= 3 and w[:-2] in dictionary:
            return w[:-2]
        return w[:-1]
    if w not in dictionary:
        if n >= 6 and w.endswith("ing"):
            stem = w[:-3]
            if stem + "e" in dictionary:
                return stem + "e"
            if stem in dictionary:
                return stem
            if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in VOWELS:
                if stem[:-1] in dictionary:
                    return stem[:-1]
        elif n >= 4 and w.endswith("ed"):
            if w[:-1] in dictionary:
                return w[:-1]
            stem = w[:-2]
            if stem in dictionary:
                return stem
            if len(stem) >= 2 and stem[-1] == stem[-2] and stem[-1] not in VOWELS:
                if stem[:-1] in dictionary:
                    return stem[:-1]
    return w


def load_exceptions(path):
    table = {}
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        surface, lemma = line.split("\t")
        table[surface.strip().lower()] = lemma.strip().lower()
    return table


def score_word(lemma, lexicon, bad_words):
    if lemma in bad_words:
        return -1.0
    if lemma in lexicon:
        return max(-1.0, min(1.0, lexicon[lemma] / 4.0))
    return 0.0


def extract_features(text, res_dir):
    res_dir = Path(res_dir)
    lexicon = load_lexicon(res_dir / "sentiment_lexicon.txt")
    bad_words = load_wordlist(res_dir / "bad_words.txt")
    stopwords = load_wordlist(res_dir / "stopwords.txt")
    abbreviations = load_wordlist(res_dir / "abbreviations.txt")
    dictionary = load_wordlist(res_dir / "base_dictionary.txt")
    mid = load_wordlist(res_dir / "middle_school_words.txt")
    high = load_wordlist(res_dir / "high_school_words.txt")
    exceptions = load_exceptions(res_dir / "irregular_lemmas.txt")

    sentences = split_sentences(normalize_whitespace(text), abbreviations)
    assert sentences, "empty document"

    pos_compounds, neg_compounds = [], []
    pos_words = neg_words = total_words = lemma_total = mid_hits = high_hits = 0
    walk = []
    for sent in sentences:
        score = score_sentence(sent, lexicon, bad_words)
        c = score["compound"]
        polarity = "pos" if c >= 0.05 else "neg" if c <= -0.05 else "neu"
        if polarity == "pos":
            pos_compounds.append(c)
        elif polarity == "neg":
            neg_compounds.append(c)
        raw = tokenize_words(sent)
        total_words += len(raw)
        lemmas = [lemmatize(t, exceptions, dictionary)
                  for t in raw if t not in stopwords]
        lemma_total += len(lemmas)
        s_pos = s_neg = 0
        for lemma in lemmas:
            v = score_word(lemma, lexicon, bad_words)
            if v >= 0.05:
                s_pos += 1
            elif v <= -0.05:
                s_neg += 1
            mid_hits += lemma in mid
            high_hits += lemma in high
        pos_words += s_pos
        neg_words += s_neg
        walk.append((sent, c, polarity, len(raw), lemmas, s_pos, s_neg))

    def safe_ratio(a, b):
        return a if b == 0 else a / b

    p_mass = sum(c**14 for c in pos_compounds)
    n_mass = sum(c**14 for c in neg_compounds)
    cop = 50.0 if p_mass + n_mass == 0 else 100.0 * p_mass / (p_mass + n_mass)

    features = {
        "pos_sentences": len(pos_compounds),
        "neg_sentences": len(neg_compounds),
        "total_sentences": len(sentences),
        "pos_sent_to_total": safe_ratio(len(pos_compounds), len(sentences)),
        "pos_sent_to_neg": safe_ratio(len(pos_compounds), len(neg_compounds)),
        "pos_words": pos_words,
        "neg_words": neg_words,
        "total_words": total_words,
        "pos_words_to_total": safe_ratio(pos_words, total_words),
        "pos_words_to_neg": safe_ratio(pos_words, neg_words),
        "words_per_sentence": safe_ratio(total_words, len(sentences)),
        "midschool_word_ratio": mid_hits / lemma_total if lemma_total else 0.0,
        "highschool_word_ratio": high_hits / lemma_total if lemma_total else 0.0,
        "coefficient_of_positivity": cop,
    }
    return features, walk


def main():
    book = Path(sys.argv[1])
    res_dir = sys.argv[2] if len(sys.argv) > 2 else "resources"
    features, walk = extract_features(book.read_text(encoding="utf-8"), res_dir)

    print("sentence walk:")
    for sent, c, pol, n_raw, lemmas, s_pos, s_neg in walk:
        print(f"  [{pol}] compound={c:.10f} raw_tokens={n_raw} "
              f"pos_w={s_pos} neg_w={s_neg} lemmas={' '.join(lemmas)}")
        print(f"        {sent}")
    print("\nfeature,value")
    for name, value in features.items():
        print(f"{name},{value:.17g}")


if __name__ == "__main__":
    main()
