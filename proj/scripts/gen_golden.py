#!/usr/bin/env python3
"""Freeze the golden sentence compounds into tests/golden_sentences.tsv.

The sentences exercise every scoring rule: plain lexicon hits, boosters
and dampeners at each distance, negation (including n't contractions, the
"no" rule, "never so/this" and "least"), but-clauses, ALL-CAPS emphasis,
exclamation and question-mark amplification, and neutral fallthrough.
None of them contains a bad-words entry; the -1.0 override is asserted
separately.
"""

from pathlib import Path

from sentiment_oracle import load_lexicon, load_wordlist, score_sentence

SENTENCES = [
    "VADER is smart, handsome, and funny.",
    "The book was good.",
    "The book was very good.",
    "The book was not good.",
    "The day felt happy and bright.",
    "The ending was terrible.",
    "The ending wasn't terrible at all.",
    "She was extremely kind to the lost traveler.",
    "He was hardly brave during the storm.",
    "The castle was beautiful, but the dungeon was horrible.",
    "What a wonderful, wonderful morning!",
    "The fire destroyed the village and everyone suffered.",
    "I love this story!!!",
    "Are you happy now??",
    "The cart rolled slowly down the road.",
    "The AMAZING wizard granted a generous gift.",
    "Nothing could ruin such a perfect afternoon.",
    "They were never so proud of their little town.",
    "The least brave knight fled the battle.",
    "No friend came to help him.",
    "The soup was kind of awful.",
    "It was a gentle, peaceful evening by the warm fire.",
    "The cruel king punished the innocent farmer without mercy.",
    "Success and glory followed the brave rescue.",
    "The quiet library held ten thousand dusty books.",
]


def main():
    resources = Path("resources")
    lexicon = load_lexicon(resources / "sentiment_lexicon.txt")
    bad_words = load_wordlist(resources / "bad_words.txt")

    lines = ["# sentence<TAB>expected_compound"]
    for sentence in SENTENCES:
        assert not any(t.lower().strip(".,!?'\"") in bad_words for t in sentence.split()), (
            "golden sentences must not contain bad-words entries: " + sentence
        )
        score = score_sentence(sentence, lexicon, bad_words)
        assert not score["forced"]
        lines.append(f"{sentence}\t{score['compound']:.10f}")

    out = Path("tests/golden_sentences.tsv")
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {out} with {len(SENTENCES)} sentences")


if __name__ == "__main__":
    main()
