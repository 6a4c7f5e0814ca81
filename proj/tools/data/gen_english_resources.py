#!/usr/bin/env python3
"""Regenerates data/{stopwords_en.txt,tags_en.tsv,lemmas_en.tsv,trigrams_en.tsv}.

Word lists below are hand-curated. Regular inflections are expanded with
English spelling rules; irregular forms are listed explicitly. The trigram
profile is counted over plain English prose found on the build machine
(license texts and the Python topic help) and only the top entries are kept.
"""
import collections
import glob
import os
import re
import sys

OUT = sys.argv[1] if len(sys.argv) > 1 else os.path.join(os.path.dirname(__file__), "..", "..", "data")

STOPWORDS = """
i me my myself we our ours ourselves you your yours yourself yourselves he him his himself
she her hers herself it its itself they them their theirs themselves what which who whom
this that these those am is are was were be been being have has had having do does did doing
a an the and but if or because as until while of at by for with about against between into
through during before after above below to from up down in out on off over under again further
then once here there when where why how all any both each few more most other some such no nor
not only own same so than too very s t can will just don should now d ll m o re ve y ain aren
couldn didn doesn hadn hasn haven isn ma mightn mustn needn shan shouldn wasn weren won wouldn
also could would may might must us yet via per within without among across toward towards upon
although though whether every either neither since onto unless whose whereas thus hence
""".split()

# verbs: base form; irregular ones carry (3sg, past, past participle, gerund)
IRREGULAR_VERBS = {
    "be": ("is", "was were", "been", "being"),
    "have": ("has", "had", "had", "having"),
    "do": ("does", "did", "done", "doing"),
    "go": ("goes", "went", "gone", "going"),
    "run": ("runs", "ran", "run", "running"),
    "make": ("makes", "made", "made", "making"),
    "take": ("takes", "took", "taken", "taking"),
    "give": ("gives", "gave", "given", "giving"),
    "get": ("gets", "got", "gotten", "getting"),
    "come": ("comes", "came", "come", "coming"),
    "see": ("sees", "saw", "seen", "seeing"),
    "know": ("knows", "knew", "known", "knowing"),
    "think": ("thinks", "thought", "thought", "thinking"),
    "say": ("says", "said", "said", "saying"),
    "tell": ("tells", "told", "told", "telling"),
    "find": ("finds", "found", "found", "finding"),
    "write": ("writes", "wrote", "written", "writing"),
    "speak": ("speaks", "spoke", "spoken", "speaking"),
    "buy": ("buys", "bought", "bought", "buying"),
    "bring": ("brings", "brought", "brought", "bringing"),
    "build": ("builds", "built", "built", "building"),
    "sell": ("sells", "sold", "sold", "selling"),
    "send": ("sends", "sent", "sent", "sending"),
    "spend": ("spends", "spent", "spent", "spending"),
    "leave": ("leaves", "left", "left", "leaving"),
    "lead": ("leads", "led", "led", "leading"),
    "meet": ("meets", "met", "met", "meeting"),
    "pay": ("pays", "paid", "paid", "paying"),
    "keep": ("keeps", "kept", "kept", "keeping"),
    "hold": ("holds", "held", "held", "holding"),
    "stand": ("stands", "stood", "stood", "standing"),
    "win": ("wins", "won", "won", "winning"),
    "lose": ("loses", "lost", "lost", "losing"),
    "begin": ("begins", "began", "begun", "beginning"),
    "grow": ("grows", "grew", "grown", "growing"),
    "fly": ("flies", "flew", "flown", "flying"),
    "drive": ("drives", "drove", "driven", "driving"),
    "eat": ("eats", "ate", "eaten", "eating"),
    "fall": ("falls", "fell", "fallen", "falling"),
    "feel": ("feels", "felt", "felt", "feeling"),
    "fight": ("fights", "fought", "fought", "fighting"),
    "catch": ("catches", "caught", "caught", "catching"),
    "teach": ("teaches", "taught", "taught", "teaching"),
    "sit": ("sits", "sat", "sat", "sitting"),
    "set": ("sets", "set", "set", "setting"),
    "put": ("puts", "put", "put", "putting"),
    "cut": ("cuts", "cut", "cut", "cutting"),
    "hit": ("hits", "hit", "hit", "hitting"),
    "let": ("lets", "let", "let", "letting"),
    "shut": ("shuts", "shut", "shut", "shutting"),
    "read": ("reads", "read", "read", "reading"),
    "hear": ("hears", "heard", "heard", "hearing"),
    "mean": ("means", "meant", "meant", "meaning"),
    "rise": ("rises", "rose", "risen", "rising"),
    "choose": ("chooses", "chose", "chosen", "choosing"),
    "break": ("breaks", "broke", "broken", "breaking"),
    "wear": ("wears", "wore", "worn", "wearing"),
    "show": ("shows", "showed", "shown", "showing"),
    "draw": ("draws", "drew", "drawn", "drawing"),
    "throw": ("throws", "threw", "thrown", "throwing"),
    "forget": ("forgets", "forgot", "forgotten", "forgetting"),
    "understand": ("understands", "understood", "understood", "understanding"),
    "sing": ("sings", "sang", "sung", "singing"),
    "swim": ("swims", "swam", "swum", "swimming"),
    "sleep": ("sleeps", "slept", "slept", "sleeping"),
    "shoot": ("shoots", "shot", "shot", "shooting"),
    "seek": ("seeks", "sought", "sought", "seeking"),
    "strike": ("strikes", "struck", "struck", "striking"),
    "steal": ("steals", "stole", "stolen", "stealing"),
    "hide": ("hides", "hid", "hidden", "hiding"),
    "ride": ("rides", "rode", "ridden", "riding"),
    "shake": ("shakes", "shook", "shaken", "shaking"),
    "wake": ("wakes", "woke", "woken", "waking"),
    "deal": ("deals", "dealt", "dealt", "dealing"),
    "lend": ("lends", "lent", "lent", "lending"),
    "bear": ("bears", "bore", "born", "bearing"),
    "bet": ("bets", "bet", "bet", "betting"),
    "spread": ("spreads", "spread", "spread", "spreading"),
    "cost": ("costs", "cost", "cost", "costing"),
    "hurt": ("hurts", "hurt", "hurt", "hurting"),
    "quit": ("quits", "quit", "quit", "quitting"),
    "freeze": ("freezes", "froze", "frozen", "freezing"),
    "forecast": ("forecasts", "forecast", "forecast", "forecasting"),
}

# regular verbs; a trailing '+' doubles the final consonant before -ed/-ing
REGULAR_VERBS = """
accept achieve acquire add admit+ affect agree allow announce answer appear apply approve argue
arrive ask attack attempt attend avoid base believe belong borrow call cancel care carry cause
celebrate change charge check claim clean close collect combine compare compete complete concern
confirm connect consider contain continue control+ cover create cross dance decide declare decline
defend deliver demand deny depend describe design destroy develop die discover discuss drop+ earn
employ enable end enjoy enter establish expand expect experience explain explore express face fail
fear file fill finish fit+ fix focus follow force form gain gather happen hate help hire hope
identify ignore imagine improve include increase indicate influence inform insist install intend
introduce invest invite involve join jump kill kick laugh launch learn like limit link list listen
live look love manage mark marry matter measure mention miss move need note notice obtain occur+
offer open operate order own pass perform pick place plan+ play point prefer+ prepare present
prevent print produce promise protect prove provide publish pull purchase push raise reach realize
receive recognize recommend record reduce refer+ reflect refuse regard relate release rely remain
remember remove rent repeat replace reply report represent request require rescue research
respond rest result return reveal review rule save score search seem serve settle share shop+
sign start stay step+ stop+ study succeed suffer suggest supply support suppose surprise survive
talk target test thank touch track trade train travel treat try turn update urge use value vote
wait walk want warn wash watch wish wonder work worry
""".split()

NOUNS = """
cat dog child man woman person people family mother father daughter son parent kid baby husband
wife friend journalist reporter editor writer author article story news press release media
outlet newspaper magazine company business market price stock share investor bank money economy
dollar deal product service customer user team player game match season coach league sport
football basketball tennis olympics election government president minister policy law court
judge vote voter campaign party politics state city country nation world border region town
village home house apartment room building office school college university student teacher
education exam class course career job work worker employee employer industry technology
software hardware computer phone device app internet data network system platform startup
science research study scientist health hospital doctor patient disease virus vaccine outbreak
film movie music song album artist actor actress show star concert festival book library
christmas holiday day week month year time morning evening night today tomorrow
weather rain storm sea beach park harbour harbor hotspot suburb tourist tourism grocery
car vehicle automotive road traffic train plane flight airport travel trip ticket
food restaurant meal dinner lunch breakfast drink water coffee wine beer
thing king ring wing spring string ceiling evening wedding
bed shed seed speed hundred need creed
crisis analysis thesis basis
mouse foot tooth goose ox
idea problem issue question answer reason way fact part place point case group number
level area line end side kind head face hand eye life death
war peace army soldier police crime victim attack security
energy oil gas climate environment change planet
""".split()

IRREGULAR_PLURALS = {
    "child": "children", "man": "men", "woman": "women", "mouse": "mice", "foot": "feet",
    "tooth": "teeth", "goose": "geese", "ox": "oxen", "crisis": "crises", "analysis": "analyses",
    "thesis": "theses", "basis": "bases", "life": "lives", "knife": "knives", "wife": "wives",
}
UNCOUNTED = {"news", "people", "media", "data", "music", "money", "software", "hardware",
             "education", "health", "research", "weather", "tourism", "traffic", "football",
             "basketball", "tennis", "olympics", "politics", "economy", "security", "peace",
             "energy", "oil", "gas", "water", "coffee", "wine", "beer", "automotive", "press",
             "christmas", "police", "food", "technology", "science", "evening", "morning"}

ADJECTIVES = """
good bad great small big large young old new long short high low early late hard easy happy sad
pretty tough fine strong weak rich poor free full open close public private local national
international global political economic financial social digital mobile new major minor
important popular famous best worse worst better little real true false clear simple possible
likely difficult different similar available recent current final main key top wide deep
dangerous famous serious various nervous careful beautiful wonderful useful powerful successful
remote northern southern eastern western
""".split()
COMPARATIVES = {
    "good": ("better", "best"), "bad": ("worse", "worst"), "big": ("bigger", "biggest"),
    "small": ("smaller", "smallest"), "large": ("larger", "largest"), "young": ("younger", "youngest"),
    "old": ("older", "oldest"), "long": ("longer", "longest"), "high": ("higher", "highest"),
    "low": ("lower", "lowest"), "strong": ("stronger", "strongest"), "hard": ("harder", "hardest"),
    "easy": ("easier", "easiest"), "happy": ("happier", "happiest"), "early": ("earlier", "earliest"),
    "late": ("later", "latest"), "tough": ("tougher", "toughest"), "rich": ("richer", "richest"),
    "poor": ("poorer", "poorest"), "wide": ("wider", "widest"), "deep": ("deeper", "deepest"),
    "pretty": ("prettier", "prettiest"), "little": ("less", "least"),
}

ADVERBS = """
obviously really quickly slowly recently mostly remotely daily nearly only early likely
usually finally already almost always never often sometimes soon still even ever well
apart together instead however
""".split()


def verb_forms(base):
    double = base.endswith("+")
    v = base.rstrip("+")
    stem = v + v[-1] if double else v
    if v.endswith("e") and not v.endswith("ee"):
        ing, ed = v[:-1] + "ing", v + "d"
    elif v.endswith("y") and v[-2] not in "aeiou":
        ing, ed = v + "ing", v[:-1] + "ied"
    else:
        ing, ed = stem + "ing", stem + "ed"
    if v.endswith(("s", "sh", "ch", "x", "z", "o")):
        s = v + "es"
    elif v.endswith("y") and v[-2] not in "aeiou":
        s = v[:-1] + "ies"
    else:
        s = v + "s"
    return v, [s, ed, ing]


def plural(n):
    if n in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[n]
    if n.endswith(("s", "sh", "ch", "x", "z")):
        return n + "es"
    if n.endswith("y") and n[-2] not in "aeiou":
        return n[:-1] + "ies"
    return n + "s"


def main():
    stop = sorted(set(STOPWORDS))
    tags = {}
    lemmas = {}

    def tag(word, t):
        tags.setdefault(word, t)

    for n in NOUNS:
        tag(n, "noun")
    for a in ADJECTIVES:
        tag(a, "adjective")
    for r in ADVERBS:
        tag(r, "adverb")
    verbs = {}
    for v, forms in IRREGULAR_VERBS.items():
        flat = []
        for f in forms:
            flat.extend(f.split())
        verbs[v] = flat
    for b in REGULAR_VERBS:
        v, forms = verb_forms(b)
        verbs.setdefault(v, forms)
    for v in verbs:
        tag(v, "verb")

    for v, forms in verbs.items():
        for f in forms:
            if f != v:
                lemmas[(f, "verb")] = v
    for n in NOUNS:
        if n in UNCOUNTED or n == "people":
            continue
        p = plural(n)
        if p != n:
            lemmas[(p, "noun")] = n
    for a, (c, s) in COMPARATIVES.items():
        lemmas[(c, "adjective")] = a
        lemmas[(s, "adjective")] = a

    # irregular forms get their own tag entry so the tagger knows them
    for (form, t), lemma in lemmas.items():
        if not form.endswith(("ing", "ed")) and not (t == "noun" and form == plural(lemma) and lemma not in IRREGULAR_PLURALS):
            if not (t == "verb" and form.endswith("s")):
                tag(form, t)

    # every lemma is a known word and maps to itself
    for (form, t), lemma in lemmas.items():
        assert lemma in tags, lemma
        assert (lemma, tags[lemma]) not in lemmas or lemmas[(lemma, tags[lemma])] == lemma, lemma
    stopset = set(stop)
    lemmas = {k: v for k, v in lemmas.items() if k[0] not in stopset and v not in stopset}
    tags = {k: v for k, v in tags.items() if k not in stopset}

    with open(os.path.join(OUT, "stopwords_en.txt"), "w") as f:
        f.write("# English stopwords, one per line\n")
        f.writelines(w + "\n" for w in stop)
    with open(os.path.join(OUT, "tags_en.tsv"), "w") as f:
        f.write("# word<TAB>tag  (tag: noun|verb|adjective|adverb|other)\n")
        f.writelines(f"{w}\t{t}\n" for w, t in sorted(tags.items()))
    with open(os.path.join(OUT, "lemmas_en.tsv"), "w") as f:
        f.write("# form<TAB>tag<TAB>lemma\n")
        f.writelines(f"{w}\t{t}\t{l}\n" for (w, t), l in sorted(lemmas.items()))

    text = []
    for p in sorted(glob.glob("/usr/share/common-licenses/*")):
        if os.path.isfile(p):
            text.append(open(p, errors="ignore").read())
    try:
        from pydoc_data import topics
        text.extend(topics.topics[k] for k in sorted(topics.topics))
    except ImportError:
        pass
    counts = collections.Counter()
    for word in re.findall(r"[a-z]+", "\n".join(text).lower()):
        padded = f" {word} "
        for i in range(len(padded) - 2):
            counts[padded[i:i + 3]] += 1
    with open(os.path.join(OUT, "trigrams_en.tsv"), "w") as f:
        f.write("# trigram<TAB>count  (words padded with one space on each side)\n")
        for g, c in counts.most_common(600):
            f.write(f"{g}\t{c}\n")


if __name__ == "__main__":
    main()
