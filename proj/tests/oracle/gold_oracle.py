#!/usr/bin/env python3
"""Reference computation of every metric over the gold CoNLL-U corpus.

Written separately from the C++ engine, straight from the metric definitions, so the
two can be checked against each other. Output: doc_id, metric_id, numerator, N, value.

    python3 tests/oracle/gold_oracle.py tests/fixtures/gold data/lexicons > tests/fixtures/gold/expected.tsv
"""
import sys
from pathlib import Path

VOWELS = set("аеєиіїоуюя")


def norm(s):
    return s.lower().replace("’", "'").replace("ʼ", "'")


def consonant(ch):
    return "а" <= ch <= "ӿ" and ch not in VOWELS and ch != "ь"


# ---- input -----------------------------------------------------------------

def read_corpus(folder):
    docs = []
    for path in sorted(Path(folder).glob("*.conllu")):
        sents, cur, sid = [], [], None
        for line in path.read_text(encoding="utf-8").splitlines() + [""]:
            if line.startswith("# sent_id = "):
                sid = line.split("=", 1)[1].strip()
            elif line.startswith("#"):
                continue
            elif not line.strip():
                if cur:
                    sents.append({"id": sid, "toks": cur})
                cur = []
            else:
                c = line.split("\t")
                if "-" in c[0] or "." in c[0]:
                    continue
                feats = {}
                if c[5] != "_":
                    for kv in c[5].split("|"):
                        k, v = kv.split("=", 1)
                        feats[k] = v
                cur.append({"i": int(c[0]), "form": c[1], "lemma": c[2], "upos": c[3], "feats": feats,
                            "head": int(c[6]), "dep": c[7]})
        docs.append((path.stem, sents))
    return docs


def read_lexicon(path):
    words, suffixes, prefixes = {}, [], []
    for line in Path(path).read_text(encoding="utf-8").splitlines():
        if not line.strip() or line.startswith("#"):
            continue
        key, feats = line.split("\t")
        d = dict(kv.split("=", 1) for kv in feats.split("|"))
        key = norm(key)
        if key.startswith("-"):
            suffixes.append((key[1:], d))
        elif key.endswith("-"):
            prefixes.append((key[:-1], d))
        else:
            words.setdefault(key, {}).update(d)
    suffixes.sort(key=lambda p: -len(p[0]))
    prefixes.sort(key=lambda p: -len(p[0]))
    return {"words": words, "suffixes": suffixes, "prefixes": prefixes}


def suffix_entry(lex, word):
    for s, d in lex["suffixes"]:
        if word.endswith(s):
            return d
    return None


# ---- tag corrections ---------------------------------------------------------

def strip_refl(w):
    return w[:-2] if w.endswith("ся") or w.endswith("сь") else w


def perfective_by_rule(aspect, lemma):
    full = norm(lemma)
    stem = strip_refl(full)
    for w in (full, stem):
        if w in aspect["words"] and "Aspect" in aspect["words"][w]:
            return aspect["words"][w]["Aspect"] == "Perf"
    d = suffix_entry(aspect, stem)
    if d and "Aspect" in d:
        return d["Aspect"] == "Perf"
    if not stem.endswith("ти"):
        return False
    for p, d in aspect["prefixes"]:
        if stem.startswith(p) and len(stem) - len(p) >= 4:
            return d.get("Aspect") == "Perf"
    return False


def correct(sent, lex):
    out = []
    for t in sent["toks"]:
        t = dict(t, feats=dict(t["feats"]))
        entry = lex["corrections"]["words"].get(norm(t["lemma"])) or lex["corrections"]["words"].get(norm(t["form"]))
        orig = t
        if entry and "UPOS" in entry and orig["upos"] == "ADV" and entry["UPOS"] != "ADV":
            t["upos"] = entry["UPOS"]
            for k, v in entry.items():
                if k != "UPOS":
                    t["feats"][k] = v
            out.append(t)
            continue
        if entry and "Animacy" in entry and t["upos"] == "NOUN":
            t["feats"]["Animacy"] = entry["Animacy"]
        if t["upos"] == "VERB" and orig["feats"].get("Aspect") == "Imp" and perfective_by_rule(lex["aspect"], t["lemma"]):
            t["feats"]["Aspect"] = "Perf"
        if (orig["feats"].get("Case") == "Acc" and orig["dep"] in ("nsubj", "nsubj:pass")
                and orig["upos"] in ("NOUN", "PROPN", "PRON") and orig["head"] > 0):
            head = sent["toks"][orig["head"] - 1]
            if head["feats"].get("Person") != "0":
                t["feats"]["Case"] = "Nom"
        out.append(t)
    return {"id": sent["id"], "toks": out}


# ---- derived morphology ------------------------------------------------------

def declension(t, lex):
    if t["upos"] != "NOUN" or t["lemma"] in ("", "_"):
        return None
    if t["feats"].get("Foreign") == "Yes" or t["feats"].get("Abbr") == "Yes":
        return None
    letters = [c for c in t["lemma"] if c.isalpha()]
    if len(letters) >= 2 and all(c.isupper() for c in letters):
        return None
    w = norm(t["lemma"])
    entry = lex["declension"]["words"].get(w)
    if entry:
        return entry["Declension"] if entry["Declension"] != "none" else None
    g = t["feats"].get("Gender")
    if not g or len(w) < 2:
        return None
    last, prev = w[-1], w[-2]
    if g == "Fem":
        if last in "ая":
            return "I"
        if consonant(last) or last == "ь":
            return "III"
    elif g == "Masc":
        if last in "ая":
            return "I"
        if last == "о" or consonant(last) or last == "ь":
            return "II"
    elif g == "Neut":
        if last in "оеє":
            return "II"
        if last == "я" and len(w) >= 3 and (prev == "'" or (consonant(prev) and prev == w[-3])):
            return "II"
        if last in "ая":
            return "IV"
    return None


def conjugation(t, lex):
    if t["upos"] != "VERB" or t["lemma"] in ("", "_"):
        return None
    conj = lex["conjugation"]
    full = norm(t["lemma"])
    for w in (full, strip_refl(full)):
        if w in conj["words"]:
            return conj["words"][w]["Conjugation"]
    d = suffix_entry(conj, strip_refl(full))
    return d["Conjugation"] if d else None


def future_aux(t):
    return t["upos"] == "AUX" and norm(t["lemma"]) == "бути" and t["feats"].get("Tense") == "Fut"


def imp_inf(t):
    return t["upos"] == "VERB" and t["feats"].get("VerbForm") == "Inf" and t["feats"].get("Aspect") == "Imp"


def tense(sent, k):
    toks = sent["toks"]
    t = toks[k]
    if t["upos"] not in ("VERB", "AUX"):
        return None
    for o in toks:
        if o is t or not (o["head"] == t["i"] or t["head"] == o["i"]):
            continue
        if (future_aux(t) and imp_inf(o)) or (imp_inf(t) and future_aux(o)):
            return "fut_complex"
    if t["upos"] == "AUX":
        return None
    f = t["feats"]
    if f.get("Mood", "Ind") != "Ind":
        return None
    tn, asp = f.get("Tense"), f.get("Aspect")
    if tn == "Pres":
        return {"Imp": "pres_imp", "Perf": "fut_perf"}.get(asp)
    if tn == "Past":
        return {"Imp": "past_imp", "Perf": "past_perf"}.get(asp)
    if tn == "Fut":
        if asp == "Perf":
            return "fut_perf"
        form = strip_refl(norm(t["form"]))
        if asp == "Imp" and any(form.endswith(e) for e in ("тиму", "тимеш", "тиме", "тимемо", "тимете", "тимуть")):
            return "fut_imp_simple"
    return None


def transitivity(sent, k, lex):
    t = sent["toks"][k]
    if t["upos"] != "VERB":
        return None
    for w in (norm(t["lemma"]), norm(t["form"])):
        if w.endswith("ся") or w.endswith("сь"):
            return "intr"
    entry = lex["transitivity"]["words"].get(norm(t["lemma"]))
    if entry:
        return "trans" if entry["Transitivity"] == "Trans" else "intr"
    if any(o["head"] == t["i"] and (o["dep"] == "obj" or o["dep"].startswith("obj:")) for o in sent["toks"]):
        return "trans"
    return "intr"


# ---- metric definitions ------------------------------------------------------

def rel(t, r):
    return t["dep"] == r or t["dep"].startswith(r + ":")


def key(t):
    return norm(t["form"] if t["lemma"] in ("", "_") else t["lemma"])


def kids(sent, t):
    return [o for o in sent["toks"] if o["head"] == t["i"]]


def f(t, k, v=None):
    if v is None:
        return k in t["feats"]
    return v in t["feats"].get(k, "").split(",")


CONTENT = {"NOUN", "VERB", "ADJ", "ADV"}
PERSONAL = ("Giv", "Sur", "Pat", "Prs")
DASHES = {"-", "–", "—", "‒", "―"}
QUOTES = {"«", "»", '"', "“", "”", "„"}


def personal(t):
    return t["upos"] == "PROPN" and any(f(t, "NameType", n) for n in PERSONAL)


def pronominal(t):
    return t["upos"] in ("PRON", "DET")


def root_pred(sent, t):
    while rel(t, "conj") and t["head"] > 0:
        t = sent["toks"][t["head"] - 1]
    return t["dep"] == "root" and t["head"] == 0


def finite(t):
    return t["upos"] in ("VERB", "AUX") and not any(f(t, "VerbForm", v) for v in ("Inf", "Conv", "Part", "Vnoun", "Ger"))


def quoted(sent):
    toks, spans, open_ = sent["toks"], [], {}
    for k, t in enumerate(toks):
        x = t["form"]
        if x == "«":
            open_.setdefault("g", k)
        elif x == "»":
            if "g" in open_:
                spans.append((open_.pop("g"), k))
        elif x == '"':
            if "a" in open_:
                spans.append((open_.pop("a"), k))
            else:
                open_["a"] = k
        elif x in ("„", "“", "”"):
            if "c" in open_ and x != "„":
                spans.append((open_.pop("c"), k))
            elif "c" not in open_ and x != "”":
                open_["c"] = k
    return sorted(spans)


def last_form(sent):
    for t in reversed(sent["toks"]):
        if t["form"] in QUOTES or t["form"] in (")", "]"):
            continue
        return t["form"]
    return ""


def token_metrics(lex):
    dim = lex["diminutives"]

    def diminutive(t):
        if t["upos"] != "NOUN":
            return False
        w = key(t)
        if w in dim["words"] and "Diminutive" in dim["words"][w]:
            return dim["words"][w]["Diminutive"] == "Yes"
        d = suffix_entry(dim, w)
        return bool(d) and d.get("Diminutive") == "Yes"

    def noun(k, v):
        return lambda s, t: t["upos"] == "NOUN" and f(t, k, v)

    def upos(*tags):
        return lambda s, t: t["upos"] in tags and not (f(t, "Foreign", "Yes") and t["upos"] != "PUNCT")

    def pron(k, v):
        return lambda s, t: pronominal(t) and f(t, k, v)

    def dots(x):
        return x == "…" or (x and set(x) == {"."})

    m = {
        "L_CONT_A": lambda s, t: t["upos"] in CONTENT,
        "L_FUNC_A": lambda s, t: t["upos"] != "PUNCT" and t["upos"] not in CONTENT,
        "L_PLURAL_NOUNS": noun("Number", "Plur"),
        "L_SINGULAR_NOUNS": noun("Number", "Sing"),
        "L_PROPER_NAME": lambda s, t: t["upos"] == "PROPN",
        "L_PERSONAL_NAME": lambda s, t: personal(t),
        "L_NOM_CASE": noun("Case", "Nom"),
        "L_GEN_CASE": noun("Case", "Gen"),
        "L_DAT_CASE": noun("Case", "Dat"),
        "L_ACC_CASE": noun("Case", "Acc"),
        "L_INS_CASE": noun("Case", "Ins"),
        "L_LOC_CASE": noun("Case", "Loc"),
        "L_VOC_CASE": noun("Case", "Voc"),
        "L_INDIRECT_ADJ": lambda s, t: t["upos"] == "ADJ" and (
            t["dep"] == "root" or rel(t, "xcomp") or any(rel(c, "cop") for c in kids(s, t))),
        "L_DIRECT_ADJ": lambda s, t: t["upos"] == "ADJ" and rel(t, "amod"),
        "L_QUALITATIVE_ADJ_SUP": lambda s, t: t["upos"] == "ADJ" and f(t, "Degree", "Sup"),
        "L_QUALITATIVE_ADJ_CMP": lambda s, t: t["upos"] == "ADJ" and f(t, "Degree", "Cmp"),
        "L_RELATIVE_ADJ": lambda s, t: t["upos"] == "ADJ" and not any(
            f(t, k) for k in ("Degree", "VerbForm", "NumType", "Poss", "PronType")),
        "L_QULITATIVE_ADJ_P": lambda s, t: t["upos"] == "ADJ" and f(t, "Degree", "Pos"),
        "L_ANIM_NOUN": noun("Animacy", "Anim"),
        "L_ADV_CMP": lambda s, t: t["upos"] == "ADV" and f(t, "Degree", "Cmp"),
        "L_ADV_POS": lambda s, t: t["upos"] == "ADV" and f(t, "Degree", "Pos"),
        "L_ADV_SUP": lambda s, t: t["upos"] == "ADV" and f(t, "Degree", "Sup"),
        "L_DIMINUTIVES": lambda s, t: diminutive(t),
        "L_FEMININE_NAMES": lambda s, t: personal(t) and f(t, "Gender", "Fem"),
        "L_FLAT_MULTIWORD": lambda s, t: rel(t, "flat") or any(rel(c, "flat") for c in kids(s, t)),
        "L_INANIM_NOUN": noun("Animacy", "Inan"),
        "L_GIVEN_NAMES": lambda s, t: t["upos"] == "PROPN" and f(t, "NameType", "Giv"),
        "L_MASCULINE_NAMES": lambda s, t: personal(t) and f(t, "Gender", "Masc"),
        "L_NOUN_MASCULINE": noun("Gender", "Masc"),
        "L_NOUN_FAMININE": noun("Gender", "Fem"),
        "L_NOUN_NEUTRAL": noun("Gender", "Neut"),
        "L_NUM_CARD": lambda s, t: f(t, "NumType", "Card") or (t["upos"] == "NUM" and not f(t, "NumType")),
        "L_NUM_ORD": lambda s, t: f(t, "NumType", "Ord"),
        "L_PRON_DEM": pron("PronType", "Dem"),
        "L_PRON_INT": pron("PronType", "Int"),
        "L_PRON_NEG": pron("PronType", "Neg"),
        "L_PRON_POS": pron("Poss", "Yes"),
        "L_PRON_PRS": lambda s, t: t["upos"] == "PRON" and f(t, "PronType", "Prs") and not f(t, "Reflex", "Yes"),
        "L_PRON_REL": pron("PronType", "Rel"),
        "L_PRON_RELATIVE": lambda s, t: t["upos"] == "PRON" and f(t, "PronType", "Rel") and key(t) == "що",
        "L_PRON_RFL": lambda s, t: t["upos"] == "PRON" and f(t, "Reflex", "Yes"),
        "L_PRON_TOT": pron("PronType", "Tot"),
        "L_SURNAMES": lambda s, t: t["upos"] == "PROPN" and f(t, "NameType", "Sur"),
        "L_PUNCT": lambda s, t: t["upos"] == "PUNCT",
        "L_PUNCT_DOT": lambda s, t: t["upos"] == "PUNCT" and dots(t["form"]),
        "L_PUNCT_COM": lambda s, t: t["upos"] == "PUNCT" and t["form"] == ",",
        "L_PUNCT_SEMC": lambda s, t: t["upos"] == "PUNCT" and t["form"] == ";",
        "L_PUNCT_COL": lambda s, t: t["upos"] == "PUNCT" and t["form"] == ":",
        "L_PUNCT_DASH": lambda s, t: t["upos"] == "PUNCT" and t["form"] in DASHES,
        "L_DIRECT_OBJ": lambda s, t: rel(t, "obj"),
        "L_INDIRECT_OBJ": lambda s, t: rel(t, "iobj"),
        "VF_ROOT_VERB_IMPERFECT": lambda s, t: t["upos"] == "VERB" and f(t, "Aspect", "Imp") and root_pred(s, t),
        "VF_ALL_VERB_IMPERFECT": lambda s, t: t["upos"] == "VERB" and f(t, "Aspect", "Imp"),
        "VF_ROOT_VERB_PERFECT": lambda s, t: t["upos"] == "VERB" and f(t, "Aspect", "Perf") and root_pred(s, t),
        "VF_ALL_VERB_PERFECT": lambda s, t: t["upos"] == "VERB" and f(t, "Aspect", "Perf"),
        "VF_PASSIVE": lambda s, t: t["upos"] == "VERB" and (
            f(t, "Voice", "Pass") or any(rel(c, "aux:pass") or rel(c, "nsubj:pass") for c in kids(s, t))),
        "VF_PARTICIPLE_PASSIVE": lambda s, t: f(t, "VerbForm", "Part") and f(t, "Voice", "Pass"),
        "VF_PARTICIPLE_ACTIVE": lambda s, t: f(t, "VerbForm", "Part") and f(t, "Voice", "Act"),
        "VF_INFINITIVE": lambda s, t: t["upos"] == "VERB" and f(t, "VerbForm", "Inf"),
        "VF_IMPERSONAL_VERBS": lambda s, t: t["upos"] == "VERB" and (f(t, "Person", "0") or (
            f(t, "VerbForm", "Fin") and f(t, "Tense", "Past") and f(t, "Gender", "Neut") and f(t, "Number", "Sing")
            and not any(rel(c, "nsubj") or rel(c, "csubj") for c in kids(s, t)))),
        "VF_ADV_PRF_PART": lambda s, t: f(t, "VerbForm", "Conv") and f(t, "Aspect", "Perf"),
        "VF_ADV_IMPRF_PART": lambda s, t: f(t, "VerbForm", "Conv") and f(t, "Aspect", "Imp"),
        "POS_VERB": upos("VERB", "AUX"),
        "POS_NOUN": upos("NOUN", "PROPN"),
        "POS_ADJ": upos("ADJ"),
        "POS_ADV": upos("ADV"),
        "POS_DET": upos("DET"),
        "POS_INTJ": upos("INTJ"),
        "POS_CONJ": upos("CCONJ", "SCONJ"),
        "POS_PART": upos("PART"),
        "POS_NUM": upos("NUM"),
        "POS_PREP": upos("ADP"),
        "POS_PRO": upos("PRON"),
        "POS_OTHER": lambda s, t: t["upos"] != "PUNCT" and (t["upos"] in ("X", "SYM") or f(t, "Foreign", "Yes")),
    }
    return m


def derived_metrics(lex):
    def tp(name):
        return lambda s, k: tense(s, k) == name

    def conj(c):
        return lambda s, k: conjugation(s["toks"][k], lex) == c

    def decl(c):
        return lambda s, k: declension(s["toks"][k], lex) == c

    return {
        "VF_PRESENT_IND_IMPERFECT": tp("pres_imp"),
        "VF_PAST_IND_IMPERFECT": tp("past_imp"),
        "VF_PAST_IND_PERFECT": tp("past_perf"),
        "VF_FUT_IND_PERFECT": tp("fut_perf"),
        "VF_FUT_IND_IMPERFECT_SIMPLE": tp("fut_imp_simple"),
        "VF_FUT_IND_COMPLEX": tp("fut_complex"),
        "VT_FIRST_CONJ": conj("I"),
        "VT_SECOND_CONJ": conj("II"),
        "VT_THIRD_CONJ": conj("III"),
        "VT_FOURTH_CONJ": conj("IV"),
        "VF_TRANSITIVE": lambda s, k: transitivity(s, k, lex) == "trans",
        "VF_INTRANSITIVE": lambda s, k: transitivity(s, k, lex) == "intr",
        "VF_FIRST_CONJ": decl("I"),
        "VF_SECOND_CONJ": decl("II"),
    }


def sentence_metrics(lex):
    speech = lex["speech_verbs"]["words"]
    amp = lex["amplifiers"]["words"]

    def direct_speech(s):
        toks = s["toks"]
        for a, b in quoted(s):
            for v, verb in enumerate(toks):
                if a < v < b or verb["upos"] != "VERB" or norm(verb["lemma"]) not in speech:
                    continue
                if any(toks[i]["head"] == verb["i"] or verb["head"] == toks[i]["i"] for i in range(a + 1, b)):
                    return True
        return False

    def conditional(s):
        for t in s["toks"]:
            if f(t, "Mood", "Cnd"):
                return True
            if t["upos"] in ("PART", "AUX") and (key(t) in ("би", "б") or norm(t["form"]) in ("би", "б")):
                return True
        return False

    def elliptic(s):
        toks = s["toks"]
        if any(rel(t, "orphan") for t in toks):
            return True
        return not any(t["upos"] in ("VERB", "AUX") for t in toks) and any(
            t["upos"] == "PUNCT" and t["form"] in DASHES for t in toks)

    return {
        "SY_PARATAXIS": lambda s: any(rel(t, "parataxis") for t in s["toks"]),
        "SY_DIRECT_SPEECH": direct_speech,
        "SY_NEGATIVE": lambda s: any(f(t, "Polarity", "Neg") or (t["upos"] == "PART" and key(t) in ("не", "ні"))
                                     for t in s["toks"]),
        "SY_NON_FINITE": lambda s: not any(finite(t) for t in s["toks"]),
        "SY_QUOTATIONS": lambda s: bool(quoted(s)),
        "SY_EXCLAMATION": lambda s: "!" in last_form(s),
        "SY_QUESTION": lambda s: "?" in last_form(s),
        "SY_ELLIPSES": elliptic,
        "SY_CONDITIONAL": conditional,
        "SY_IMPERATIVE": lambda s: any(f(t, "Mood", "Imp") for t in s["toks"]),
        "SY_AMPLIFIED_SENT": lambda s: any(
            t["upos"] == "PART" and (norm(t["lemma"]) in amp or norm(t["form"]) in amp) for t in s["toks"]),
    }


def per_token_span(lex):
    return {
        "SY_POSITIONING": lambda s, t: rel(t, "appos"),
        "SY_NOUN_PHRASES": lambda s, t: t["upos"] in ("NOUN", "PROPN") and not (
            rel(t, "flat") or rel(t, "compound") or rel(t, "fixed")),
    }


def ratio_metrics():
    return {
        "L_TYPE_TOKEN_RATIO_LEMMAS": lambda t: key(t),
        "L_CONT_T": lambda t: key(t) if t["upos"] in CONTENT else None,
        "L_FUNC_T": lambda t: key(t) if t["upos"] != "PUNCT" and t["upos"] not in CONTENT else None,
    }


def compute(doc, lex):
    sents = [correct(s, lex) for s in doc]
    n = sum(len(s["toks"]) for s in sents)
    counts = {}
    for mid, pred in {**token_metrics(lex), **per_token_span(lex)}.items():
        counts[mid] = sum(1 for s in sents for t in s["toks"] if pred(s, t))
    for mid, pred in derived_metrics(lex).items():
        counts[mid] = sum(1 for s in sents for k in range(len(s["toks"])) if pred(s, k))
    for mid, pred in sentence_metrics(lex).items():
        counts[mid] = sum(len(s["toks"]) for s in sents if pred(s))
    for mid, keyf in ratio_metrics().items():
        counts[mid] = len({keyf(t) for s in sents for t in s["toks"]} - {None})
    return counts, n


def main():
    corpus, lexdir = sys.argv[1], Path(sys.argv[2])
    lex = {name: read_lexicon(lexdir / f"{name}.tsv") for name in
           ("corrections", "aspect", "declension", "conjugation", "transitivity", "diminutives", "speech_verbs",
            "amplifiers")}
    print("doc_id\tmetric_id\tnumerator\tN\tvalue")
    for doc_id, doc in read_corpus(corpus):
        counts, n = compute(doc, lex)
        for mid in sorted(counts):
            print(f"{doc_id}\t{mid}\t{counts[mid]}\t{n}\t{counts[mid] / n:.17g}")


if __name__ == "__main__":
    main()
