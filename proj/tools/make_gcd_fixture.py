#!/usr/bin/env python3
# Copyright 2026 The clinwer Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Generates data/gcd_sample.jsonl, a synthetic stand-in for a private
clinical dialogue corpus: 7 dialogue files x 47 utterances, transcribed by
four simulated ASR systems.

Per system the fixture pins how many utterances were produced and how many
of those match the reference exactly after normalization:

    aws        299 produced, 30 equal
    microsoft  300 produced, 27 equal
    ibm        284 produced,  7 equal
    google     225 produced,  1 equal

Utterances a system skipped have no record for that system. The first three
utterances of file gcd01 carry fixed sentences whose AWS output is pinned too.
Output is deterministic (fixed seed); rerun after changing anything here.
"""
import json
import pathlib
import random

SEED = 20220901
FILES = 7
UTTS = 47
SYSTEMS = [  # label, produced, equal, per-word error rate
    ("aws", 299, 30, 0.22),
    ("microsoft", 300, 27, 0.18),
    ("ibm", 284, 7, 0.27),
    ("google", 225, 1, 0.33),
]

PINNED = [
    ("So do you have any ideas as to what might be the cause of your symptoms at the moment?",
     "So do you have any ideas as to what might be the cause of your symptoms at the moment?"),
    ("Have you noticed any changes in your weight?",
     "Do you noticed any changes in your wit?"),
    ("Okay have you noticed any mucus in your bowel motions?",
     "Okay have you noticed any mucus in your bible Moshe?"),
]

CLINICIAN = [
    "How often are you opening your bowels at the moment?",
    "Have you had any abdominal pain or cramping this week?",
    "Are you still taking the mesalazine twice a day?",
    "When did you last have a colonoscopy?",
    "Have you noticed any blood in your stool?",
    "Is the pain worse after you eat?",
    "Have you been waking up at night to open your bowels?",
    "Any joint pains or problems with your eyes or skin?",
    "How has your appetite been recently?",
    "Are you managing to keep up with work?",
    "We could consider starting you on azathioprine.",
    "I would like to arrange some blood tests and a calprotectin.",
    "And I know that you have been on fortnightly adalimumab.",
    "Have you had any side effects from the injections?",
    "Do you smoke at all?",
    "Has anyone in your family had Crohn's disease or colitis?",
]
PATIENT = [
    "It has been about six times a day for the last fortnight.",
    "Mostly in the lower left side of my tummy.",
    "Yes I take them every morning and evening.",
    "I think it was about two years ago.",
    "There has been a wee bit of blood now and again.",
    "It does get worse after a big meal.",
    "Aye maybe once or twice a night.",
    "My knees have been quite sore lately.",
    "I have not really felt like eating much.",
    "I have had to take a few days off work.",
    "I was a bit worried about the steroids.",
    "The injections leave a bit of a bruise.",
    "No I stopped smoking five years ago.",
    "My aunt has got ulcerative colitis I think.",
    "I have lost about half a stone.",
    "I feel tired all the time to be honest.",
]
CONFUSIONS = ["wit", "bible", "Moshe", "Adelaida", "map", "colon", "ask", "the", "a",
              "bowl", "stole", "mess", "mean", "sir", "do", "and", "eye", "nice", "pain"]


def references(rng):
    refs = []
    for f in range(FILES):
        file_id = f"gcd{f + 1:02d}"
        for u in range(UTTS):
            speaker = "clinician" if u % 2 == 0 else "patient"
            if f == 0 and u < len(PINNED):
                speaker = "clinician"
                text = PINNED[u][0]
            else:
                text = rng.choice(CLINICIAN if speaker == "clinician" else PATIENT)
            refs.append({"file_id": file_id, "utt": u, "speaker": speaker, "ref": text})
    return refs


def restyle(text, rng):
    """Equal after normalization but not byte-identical."""
    words = text.split()
    if rng.random() < 0.5:
        words[0] = words[0].lower()
    out = " ".join(words)
    return out.rstrip(".?") if rng.random() < 0.5 else out


def corrupt(text, rate, rng):
    words = text.split()
    out = []
    for w in words:
        r = rng.random()
        if r < rate * 0.6:
            out.append(rng.choice(CONFUSIONS))
        elif r < rate * 0.85:
            pass
        elif r < rate:
            out.extend([w, rng.choice(CONFUSIONS)])
        else:
            out.append(w)
    if norm(" ".join(out)) == norm(text):
        out = words[:-1] + ["sir"] if norm(words[-1]) != "sir" else words[:-1] + ["mam"]
    return " ".join(out)


def norm(text):
    return " ".join("".join(c for c in w.lower() if c.isalnum() or c == "'") for w in text.split())


def main():
    rng = random.Random(SEED)
    refs = references(rng)
    lines = []
    for system, produced, equal, rate in SYSTEMS:
        keep = set(range(len(refs)))
        pinned_idx = set(range(len(PINNED))) if system == "aws" else set()
        droppable = sorted(keep - pinned_idx)
        for i in rng.sample(droppable, len(refs) - produced):
            keep.discard(i)
        kept = sorted(keep)
        candidates = [i for i in kept if i not in pinned_idx]
        n_equal = equal - (1 if system == "aws" else 0)
        equal_idx = set(rng.sample(candidates, n_equal))
        for i in kept:
            r = refs[i]
            if i in pinned_idx:
                hyp = PINNED[i][1]
            elif i in equal_idx:
                hyp = restyle(r["ref"], rng)
            else:
                hyp = corrupt(r["ref"], rate, rng)
            rec = dict(r)
            rec["hyp"] = hyp
            rec["system"] = system
            lines.append(json.dumps(rec, ensure_ascii=False))
    out = pathlib.Path(__file__).resolve().parent.parent / "data" / "gcd_sample.jsonl"
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
