#!/usr/bin/env python3
"""Writes data/seed/cse.tsv and data/seed/MANIFEST.

The noun and verb paradigms are products of a few morpheme slots, so they are
generated here instead of typed by hand. Rows are emitted in a fixed order;
re-running the script on an unchanged file is a no-op.

Row format: pattern TAB pos TAB seg:Tag=Val|seg:Tag=Val [TAB branch=cond;...]
"""

import collections
import pathlib
import sys

DATIVE_COND = "ga=!k,q;ka=k;qa=q"
TERM_COND = "gacha=!k,q;kacha=k;qacha=q"
POSS3_COND = "i=C;si=V"
GAN_COND = "gan=!k,q;kan=k;qan=q"
GIN_COND = "gin=!k,q;kin=k;qin=q"
GACH_COND = "gach=!k,q;kach=k;qach=q"
PRES_COND = "a=C;y=V"

rows = []


def row(pos, segments, cond=""):
    pattern = "".join(p for p, _ in segments)
    feats = "|".join(f"{p}:{f}" for p, f in segments)
    rows.append((pattern, pos, feats, cond))


def nouns():
    # (stem-adjacent pattern, pattern after another morpheme, feature, condition)
    plural = [None, ("lar", "lar", "Number=Plur", "")]
    poss = [None,
            ("(i)m", "im", "Poss=1Sg", ""),
            ("(i)ng", "ing", "Poss=2Sg", ""),
            ("{i|si}", "i", "Poss=3", POSS3_COND),
            ("(i)miz", "imiz", "Poss=1Pl", ""),
            ("(i)ngiz", "ingiz", "Poss=2Pl", "")]
    case = [None,
            ("ning", "ning", "Case=Gen", ""),
            ("ni", "ni", "Case=Acc", ""),
            ("{ga|ka|qa}", "ga", "Case=Dat", DATIVE_COND),
            ("da", "da", "Case=Loc", ""),
            ("dan", "dan", "Case=Abl", ""),
            ("{gacha|kacha|qacha}", "gacha", "Case=Term", TERM_COND)]
    for pl in plural:
        for po in poss:
            for ca in case:
                slots = [s for s in (pl, po, ca) if s is not None]
                if not slots:
                    continue
                segs = []
                cond = ""
                for i, (first, later, feat, c) in enumerate(slots):
                    if i == 0:
                        segs.append((first, feat))
                        cond = c
                    else:
                        segs.append((later, feat))
                row("NOUN", segs, cond)


def pronouns():
    for p, f in [("ni", "Case=Acc"), ("ning", "Case=Gen"), ("ing", "Case=Gen"), ("ga", "Case=Dat"),
                 ("da", "Case=Loc"), ("dan", "Case=Abl"), ("nga", "Case=Dat"), ("nda", "Case=Loc"),
                 ("ndan", "Case=Abl"), ("day", "Case=Equ"), ("nday", "Case=Equ")]:
        row("PRON", [(p, f)])
    row("PRON", [("lar", "Number=Plur")])
    for p, f in [("ni", "Case=Acc"), ("ning", "Case=Gen"), ("ga", "Case=Dat"), ("da", "Case=Loc"),
                 ("dan", "Case=Abl")]:
        row("PRON", [("lar", "Number=Plur"), (p, f)])


def numerals():
    row("NUM", [("ta", "NumType=Card")])
    for p, f in [("ni", "Case=Acc"), ("ga", "Case=Dat"), ("da", "Case=Loc"), ("si", "Poss=3")]:
        row("NUM", [("ta", "NumType=Card"), (p, f)])
    row("NUM", [("tadan", "NumType=Dist")])
    row("NUM", [("tacha", "NumType=Approx")])
    row("NUM", [("lab", "NumType=Approx")])
    row("NUM", [("(i)nchi", "NumType=Ord")])
    for p, f in [("si", "Poss=3"), ("ni", "Case=Acc"), ("ga", "Case=Dat"), ("da", "Case=Loc")]:
        row("NUM", [("(i)nchi", "NumType=Ord"), (p, f)])


def adjectives():
    row("ADJ", [("roq", "Degree=Cmp")])
    row("ADJ", [("roq", "Degree=Cmp"), ("dir", "Cop=Yes")])
    row("ADJ", [("(i)mtir", "Degree=Dim")])
    row("ADJ", [("dir", "Cop=Yes")])


def adverbs():
    row("ADV", [("cha", "Case=Equ")])
    row("ADV", [("{gacha|kacha|qacha}", "Case=Term")], TERM_COND)


def verbs():
    short_person = [("m", "Person=1Sg"), ("ng", "Person=2Sg"), None, ("k", "Person=1Pl"),
                    ("ngiz", "Person=2Pl"), ("lar", "Person=3Pl")]
    long_person = [("man", "Person=1Sg"), ("san", "Person=2Sg"), None, ("miz", "Person=1Pl"),
                   ("siz", "Person=2Pl"), ("lar", "Person=3Pl")]

    def with_persons(prefix, persons, third=None, cond=""):
        for p in persons:
            if p is None:
                segs = prefix + ([third] if third else [])
            else:
                segs = prefix + [p]
            row("VERB", segs, cond)

    neg = ("ma", "Polarity=Neg")
    past = ("di", "Tense=Past")
    cnd = ("sa", "Mood=Cnd")
    row("VERB", [("moq", "VerbForm=Inf")])
    with_persons([past], short_person)
    with_persons([neg, past], short_person)
    pres_person = long_person[:2] + [None] + long_person[3:5] + [("dilar", "Person=3Pl")]
    with_persons([("{a|y}", "Tense=Pres")], pres_person, ("di", "Person=3"), PRES_COND)
    with_persons([neg, ("y", "Tense=Pres")], pres_person, ("di", "Person=3"))
    prog_person = long_person[:2] + [None] + long_person[3:5] + [("tilar", "Person=3Pl")]
    with_persons([("yap", "Tense=Prog")], prog_person, ("ti", "Person=3"))
    with_persons([cnd], short_person)
    with_persons([neg, cnd], short_person)
    part = ("{gan|kan|qan}", "VerbForm=Part")
    with_persons([part], long_person, cond=GAN_COND)
    with_persons([part, past], short_person, cond=GAN_COND)
    with_persons([neg, ("gan", "VerbForm=Part")], long_person)
    for p, f in [("da", "Case=Loc"), ("dan", "Case=Abl")]:
        row("VERB", [part, (p, f)], GAN_COND)
    row("VERB", [part, ("i", "Poss=3")], GAN_COND)
    row("VERB", [part, ("i", "Poss=3"), ("ni", "Case=Acc")], GAN_COND)
    row("VERB", [part, ("mi", "Question=Yes")], GAN_COND)
    with_persons([("moqda", "Tense=Prog")], long_person)
    with_persons([("moqchi", "Mood=Des")], long_person)
    row("VERB", [("(i)b", "VerbForm=Conv")])
    row("VERB", [("{gach|kach|qach}", "VerbForm=Conv")], GACH_COND)
    row("VERB", [("(a)yot", "Tense=Prog"), ("gan", "VerbForm=Part")])
    vn = ("(i)sh", "VerbForm=Vnoun")
    row("VERB", [vn])
    for p, f in [("i", "Poss=3"), ("ni", "Case=Acc"), ("ga", "Case=Dat"), ("da", "Case=Loc"),
                 ("dan", "Case=Abl")]:
        row("VERB", [vn, (p, f)])
    row("VERB", [("(i)ng", "Mood=Imp")])
    row("VERB", [("(i)ng", "Mood=Imp"), ("lar", "Number=Plur")])
    row("VERB", [("{gin|kin|qin}", "Mood=Imp")], GIN_COND)
    row("VERB", [("sin", "Mood=Imp")])
    row("VERB", [neg, ("ng", "Mood=Imp")])
    row("VERB", [neg, ("sin", "Mood=Imp")])
    row("VERB", [("(a)y", "Mood=Opt"), ("lik", "Person=1Pl")])
    row("VERB", [past, ("mi", "Question=Yes")])
    row("VERB", [past, ("ng", "Person=2Sg"), ("mi", "Question=Yes")])


def main():
    out_dir = pathlib.Path(sys.argv[1]) if len(sys.argv) > 1 else pathlib.Path(__file__).parent.parent / "data" / "seed"
    nouns()
    pronouns()
    numerals()
    adjectives()
    adverbs()
    verbs()

    seen = set()
    for pattern, pos, _, _ in rows:
        key = (pattern, pos)
        assert key not in seen, f"duplicate {key}"
        seen.add(key)

    lines = ["# Complete set of inflectional endings (seed subset).",
             "# pattern<TAB>pos<TAB>segment:Tag=Val|...[<TAB>branch=condition;...]",
             "# Generated by tools/gen_seed_cse.py; edit the script, not this file."]
    for pattern, pos, feats, cond in rows:
        cols = [pattern, pos, feats] + ([cond] if cond else [])
        lines.append("\t".join(cols))
    (out_dir / "cse.tsv").write_text("\n".join(lines) + "\n", encoding="utf-8")

    counts = collections.Counter(pos for _, pos, _, _ in rows)
    order = ["NOUN", "VERB", "NUM", "ADJ", "PRON", "ADV"]
    manifest = ["# Per-POS entry counts of cse.tsv; checked by the lexicon tests and `lexicon validate`."]
    manifest += [f"{p}\t{counts.get(p, 0)}" for p in order]
    manifest.append(f"TOTAL\t{len(rows)}")
    (out_dir / "MANIFEST").write_text("\n".join(manifest) + "\n", encoding="utf-8")


if __name__ == "__main__":
    main()
