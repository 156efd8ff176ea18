#!/usr/bin/env python3
"""Regenerates the bundled demo tag lexicon and topic embeddings.

The lexicon is hand-curated: closed-class words are listed exhaustively,
open-class words are listed by base form and inflected with simple rules,
with explicit overrides where a word's most frequent tag differs from the
inflection default.

The embeddings are synthetic: each word is a mix of hand-assigned topic
directions plus small word-specific noise. They give topically sensible
nearest neighbours for the demo without redistributing a trained model.

Usage: python3 tools/gen_demo_data.py  (writes into crates/core/data/)
"""

import math
import os
import random

OUT = os.path.join(os.path.dirname(__file__), "..", "crates", "core", "data")

CLOSED = {
    "DT": "a an the this that these those every each all both no another some any either neither",
    "IN": "of in on at for with by from about above before after into through over under without "
          "within since like than as because if while until upon across around behind below beneath "
          "beside between beyond during except near outside toward towards against among along unlike "
          "per via whether though although",
    "CC": "and or but nor plus",
    "TO": "to",
    "PRP": "i me you he him she it we us they them myself yourself himself herself itself ourselves "
           "yourselves themselves",
    "PRP$": "my your his her its our their",
    "WP": "who whom what whoever whatever",
    "WP$": "whose",
    "WDT": "which whichever",
    "WRB": "where when why how whenever wherever",
    "MD": "can could will would shall should may might must cannot ca wo",
    "EX": "there",
    "UH": "yes hello goodbye wow mmm oh hey ok okay hooray bravo",
    "RP": "up out off down",
    "CD": "one two three four five six seven eight nine ten hundred thousand million millions billion zero",
    "PDT": "half quite",
    "JJR": "better bigger faster smarter stronger higher harder easier more less greater fresher "
           "brighter larger smaller longer shorter sweeter richer wiser deeper closer cheaper safer",
    "JJS": "best greatest freshest most least biggest finest brightest smartest fastest strongest "
           "highest sweetest largest",
    "RBR": "further",
    "POS": "'s",
    "RB": "not n't never always ever forever here now very so too just only also again still already "
          "even together ahead forward alike alone away back everywhere anywhere somewhere nowhere once "
          "twice inside else instead almost soon often perhaps maybe rather quite well straight tonight "
          "daily nearly really truly simply totally seriously naturally proudly beautifully deliciously "
          "refreshingly incredibly unbelievably differently responsibly safely wisely easily quickly "
          "slowly happily freely highly deeply entirely",
}

PUNCT = {
    ".": ".", "!": ".", "?": ".",
    ",": ",",
    ":": ":", ";": ":", "-": ":", "…": ":", "--": ":",
    "\"": "``", "“": "``", "”": "''", "'": "''", "‘": "``", "’": "''",
    "(": "-LRB-", ")": "-RRB-",
    "$": "$", "#": "#",
}

# Nouns by base form; plurals generated unless irregular.
NOUNS = """
act action adventure age air answer appetite apple art artist balance bank beauty bed bite body book
boredom box brain bread break brand broom burger business butter cake call car care cafe castle cauldron
chance change charity cheese chef child choice city class coffee college comfort community company
computer conversation cook craft creativity crust cup curse customer cut data day deal design destination
detail device diamond difference dinner discovery distance doctor door dough dragon dream drink duty earth
economy education energy engineer enchantment espresso excellence excuse exercise experience expert face
fame family farm fashion feeling fight fitness flavor flight flow flower food forest fortune freedom
friend fries fuel fun future game garden generation genius gift glory goal gold greatness guitar hair hand
happiness health heart highway holiday home homework honey hope horizon hotel hour house idea imagination
ingredient innovation instinct intellect intelligence internet job journey joy juice kid kindness king
kitchen knowledge lab land latte leader learning lecture lesson life lifetime light limit love lunch
machine magic makeup map market master matter meal medicine melody menu message milk mind miracle moment
money morning mountain muscle music mystery name nation nature neighbor network night number ocean oven
owl package paint painting paradise partner passion passport path pay peace piano piece pioneer pizza
place plan planet pleasure possibility potential potion power practice pride price priority pro process
product profit progress promise prophecy quality queen question race rain rainbow reading recipe rest
result revolution reward rhythm ride rise river road robot room rose rule safety salad sandwich sauce
school science sea second secret sense service shop sky skill skin slice slogan smile society soda sofa
software soil solution song sorcerer sorcery soul sound source speed spell spirit sport star state step
story strength stress student study style substance success summer sun support taste tea teacher team
technology test thing thought thrill ticket time today tomorrow tomato torch touch town tradition
training travel treat tree trip trust tutor university vacation value victory view voice volunteer wand
warmth water wave way wealth wealthiness wellness wing winner wisdom witch witchcraft wizard wizardry
wonder work world worry year youth academy alchemy curriculum exam classroom scholar mentor classic
algorithm automation advertising marketing investment account loan credit cash fruit chicken grill menu
restaurant breakfast bean sport crowd customer ambition achievement delight glory cinema film movie
concert band clothes shoe furniture discipline occult magician charm sword knight quest legend
phone app code engine battery planet galaxy rocket space ocean beach island sunshine holiday camera
picture photo memory dog cat pet animal baby mother father parent teenager athlete coach hero courage
airline beef champion dress compromise control opportunity silence fingertip
""".split()

# Mass nouns get no generated plural.
MASS = set("""
witchcraft wizardry sorcery alchemy homework magic music knowledge wisdom money happiness kindness
wellness wealthiness fitness boredom butter honey milk fries data software advertising marketing
automation furniture clothes sunshine courage creativity excellence greatness freedom health wealth
warmth safety education intelligence imagination innovation technology fame glory joy peace pride
beef cash coffee tea water juice espresso fun luck
""".split())

IRREGULAR_PLURALS = {
    "child": "children", "person": "people", "man": "men", "woman": "women", "mouse": "mice",
    "foot": "feet", "tooth": "teeth", "life": "lives", "knife": "knives", "leaf": "leaves",
}

VERBS = """
act afford aim ask awaken bake be believe bite break breathe brew bring build call capture carry cast
catch celebrate challenge chase choose climb come compare connect cook count create cultivate cut dance
deliver demand deserve design develop discover do dream drive eat educate elevate empower enchant enjoy
enlighten expand expect explore express feed feel find fly follow forget generate get give go grow guide
happen have heal hear help hold ignite imagine inspire instruct invest join jump keep know laugh lead
learn let like live look make meet mold move need nurture offer open order own pamper pave pay plan play
practise prepare protect reach read relax repeat reward ride rise rule run save say see seize sell send
serve set settle shape share shine shop show sing sit sleep smell speak start stay stop study take talk
teach tell think train travel treat trust try understand unleash unlock use visit wait wake walk want
watch welcome win wonder work write conjure bewitch mentor tutor coach achieve support charm wander dress change power control melt roast grind
""".split()

# Words in both lists: which tag the bare form gets. Default for a noun+verb word is NN.
PREFER_VERB = set("""
bake be bite break breathe brew bring build call capture carry cast catch celebrate chase choose climb
come connect cook count create cut deliver do drive eat educate feed find fly get give go grow heal help
hold ignite imagine inspire join jump keep know laugh lead learn look make meet move need pay run save
say see seize send serve set share shine show sing sit sleep smell start stay stop take teach tell think
treat try use wait wake want watch win
""".split())

IRREGULAR_PAST = {
    "be": ("was", None), "bite": ("bit", "bitten"), "break": ("broke", "broken"), "bring": ("brought", "brought"),
    "build": ("built", "built"), "buy": ("bought", "bought"), "catch": ("caught", "caught"),
    "choose": ("chose", "chosen"), "come": ("came", None), "cut": (None, None), "do": ("did", "done"),
    "drink": ("drank", "drunk"), "drive": ("drove", "driven"), "eat": ("ate", "eaten"), "feed": ("fed", None),
    "feel": ("felt", None), "find": ("found", None), "fly": ("flew", "flown"), "forget": ("forgot", "forgotten"),
    "get": ("got", "gotten"), "give": ("gave", "given"), "go": ("went", "gone"), "grow": ("grew", "grown"),
    "have": ("had", None), "hear": ("heard", None), "hold": ("held", None), "keep": ("kept", None),
    "know": ("knew", "known"), "lead": ("led", None), "let": (None, None), "make": ("made", None),
    "meet": ("met", None), "pay": ("paid", None), "read": (None, None), "ride": ("rode", "ridden"),
    "rise": ("rose", "risen"), "run": ("ran", None), "say": ("said", None), "see": ("saw", "seen"),
    "sell": ("sold", None), "send": ("sent", None), "set": (None, None), "shine": ("shone", None),
    "show": (None, "shown"), "sing": ("sang", "sung"), "sit": ("sat", None), "sleep": ("slept", None),
    "speak": ("spoke", "spoken"), "take": ("took", "taken"), "teach": ("taught", None),
    "tell": ("told", None), "think": ("thought", None), "understand": ("understood", None),
    "wake": ("woke", "woken"), "win": ("won", None), "write": ("wrote", "written"), "cast": (None, None),
}

ADJECTIVES = """
amazing awesome beautiful big bold brave bright calm clear curious delicious different direct easy fast
free fresh good great green happy hard high honest hungry impossible large little local long loud many
natural new nice open original perfect possible pure real ready short simple single small smart strong
sweet true ultimate unknown whole wild young welcome worth alive own other first last next magical
mystical ancient technical righteous sheer crazy wise noble brilliant clever creative modern fine rich
warm cool hot cold soft safe healthy wonderful powerful special famous popular global digital human
social personal professional old eternal golden silver dark secret handmade sure full empty lucky proud
funny friendly gentle quiet busy deep huge tiny tasty yummy fancy elegant cozy organic classic legendary
enchanted mysterious spellbinding grand royal bright grateful kind quick slow heavy light rare
""".split()

# Explicit final word -> tag overrides (most frequent tag wins).
OVERRIDES = {
    "today": "NN", "tomorrow": "NN", "home": "NN", "magic": "NN", "light": "NN", "gold": "NN",
    "fun": "NN", "kind": "NN", "secret": "NN", "classic": "JJ", "second": "JJ", "first": "JJ",
    "open": "JJ", "welcome": "JJ", "daily": "RB", "fast": "RB", "hard": "RB", "high": "JJ",
    "feeling": "NN", "morning": "NN", "thing": "NN", "things": "NNS", "king": "NN", "nothing": "NN",
    "something": "NN", "everything": "NN", "anything": "NN", "everyone": "NN", "anyone": "NN",
    "someone": "NN", "nobody": "NN", "everybody": "NN", "somebody": "NN", "people": "NNS",
    "learning": "NN", "reading": "NN", "training": "NN", "painting": "NN", "building": "VBG",
    "others": "NNS", "minds": "NNS", "made": "VBN", "built": "VBN", "born": "VBN", "done": "VBN",
    "loved": "VBN", "trusted": "VBN", "tested": "VBN", "crafted": "VBN", "designed": "VBN",
    "inspired": "VBN", "powered": "VBN", "brewed": "VBN", "baked": "VBN", "connected": "VBN",
    "driven": "VBN", "grown": "VBN", "proven": "VBN", "lost": "VBN", "thought": "NN", "are": "VBP",
    "am": "VBP", "is": "VBZ", "were": "VBD", "been": "VBN", "being": "VBG", "has": "VBZ", "have": "VBP",
    "does": "VBZ", "do": "VB", "likes": "VBZ", "like": "IN", "love": "NN", "help": "VB", "care": "NN",
    "change": "NN", "dream": "NN", "drink": "NN", "fight": "NN", "play": "VB", "work": "NN",
    "rest": "NN", "taste": "NN", "touch": "NN", "trust": "NN", "wave": "NN", "wonder": "NN",
    "practice": "NN", "experience": "NN", "order": "NN", "power": "NN", "plan": "NN", "shape": "NN",
    "matter": "NN", "reward": "NN", "ride": "NN", "rise": "NN", "shop": "NN", "study": "NN",
    "travel": "NN", "visit": "NN", "walk": "NN", "balance": "NN", "dance": "NN", "exercise": "NN",
    "master": "NN", "name": "NN", "rule": "NN", "spell": "NN", "value": "NN", "talk": "NN",
    "smile": "NN", "start": "VB", "act": "NN", "design": "NN", "offer": "VB", "support": "NN",
    "pay": "VB", "cook": "VB", "cut": "VB", "plus": "CC", "worth": "JJ", "own": "JJ", "less": "JJR",
    "more": "JJR", "most": "JJS", "alive": "JJ", "well": "RB", "back": "RB", "set": "VB",
    "tonight": "NN", "single": "JJ", "paid": "VBN", "seen": "VBN", "known": "VBN", "given": "VBN",
    "chosen": "VBN", "taken": "VBN", "written": "VBN", "forgotten": "VBN", "broken": "VBN",
    "bitten": "VBN", "lives": "NNS", "stress": "NN", "success": "NN", "business": "NN",
    "glass": "NN", "class": "NN", "boss": "NN", "press": "NN", "process": "NN", "progress": "NN",
    "happiness": "NN", "kindness": "NN", "wellness": "NN", "wealthiness": "NN", "fitness": "NN",
    "news": "NN", "series": "NN", "mathematics": "NN", "physics": "NN", "fries": "NNS",
    "numbers": "NNS", "mentor": "NN", "tutor": "NN", "coach": "NN", "charm": "NN", "sorcerer": "NN",
    "wealth": "NN", "saw": "VBD", "rose": "NN", "roses": "NNS", "deal": "NN", "guide": "NN",
    "watch": "VB", "use": "VB", "need": "VB", "want": "VB", "drive": "VB", "mold": "VB",
    "welcome": "JJ", "treat": "VB", "trip": "NN", "test": "NN", "flow": "NN", "cast": "VB",
    "ignite": "VB", "paradise": "NN", "pro": "NN", "alike": "RB", "short": "JJ", "mmm": "UH",
    "stays": "VBZ", "keeps": "VBZ", "goes": "VBZ", "comes": "VBZ", "makes": "VBZ", "knows": "VBZ",
    "says": "VBZ", "tells": "VBZ", "tastes": "VBZ", "works": "VBZ", "meets": "VBZ", "begins": "VBZ",
    "ends": "VBZ", "counts": "VBZ", "matters": "VBZ", "happens": "VBZ", "awaits": "VBZ",
    "excites": "VBZ", "deserves": "VBZ", "compares": "VBZ", "beats": "VBZ", "learns": "VBZ",
    "sleeps": "VBZ", "starts": "VBZ", "helps": "VBZ", "cares": "VBZ", "loves": "VBZ",
    "lead": "VB", "leader": "NN", "calling": "VBG", "watching": "VBG", "serving": "VBG",
    "going": "VBG",
}

EXTRA = {
    "begin": "VB", "begins": "VBZ", "enough": "RB", "end": "NN", "ends": "VBZ", "awaits": "VBZ", "await": "VB",
    "excite": "VB", "compares": "VBZ", "cannot": "MD", "forever": "RB", "everything": "NN",
    "yours": "PRP", "mine": "PRP", "ours": "PRP", "theirs": "PRP", "since": "IN",
    "let's": "VB", "it's": "PRP", "you're": "PRP", "we're": "PRP", "don't": "VBP", "can't": "MD",
    "won't": "MD", "everyone's": "NN", "world's": "NN", "true": "JJ", "mmm": "UH",
    "slogatron": "NNP", "hogwarts": "NNP", "mcdonald's": "NNP",
}

STOPWORDS = """
a about above after again against all almost also although always am among an and another any anyone
anything are around as at be because been before being below between both but by can cannot could did
do does doing down during each either else enough even ever every everyone for from further had has have
having he her here hers herself him himself his how however i if in into is it its itself just least
less let many may me might mine more most much must my myself neither no nobody none nor not nothing now
of off often on once one only onto or other others otherwise our ours ourselves out over own per quite
rather same several shall she should since so some somebody someone something such than that the their
theirs them themselves then there these they this those though through thus to too toward towards under
until up upon us very via was we were what whatever when where whether which while who whom whose why
will with within without would yet you your yours yourself yourselves
""".split()


def plural(n):
    if n in IRREGULAR_PLURALS:
        return IRREGULAR_PLURALS[n]
    if n.endswith(("s", "x", "ch", "sh")):
        return n + "es"
    if n.endswith("y") and n[-2] not in "aeiou":
        return n[:-1] + "ies"
    return n + "s"


def third_person(v):
    if v == "be":
        return "is"
    if v == "have":
        return "has"
    if v in ("do", "go"):
        return v + "es"
    return plural(v)


def ing(v):
    if v == "be":
        return "being"
    if v.endswith("ie"):
        return v[:-2] + "ying"
    if v.endswith("e") and not v.endswith(("ee", "ye", "oe")):
        return v[:-1] + "ing"
    if v in ("run", "sit", "cut", "set", "win", "stop", "shop", "plan", "jump_"):
        return v + v[-1] + "ing"
    return v + "ing"


def past(v):
    if v.endswith("e"):
        return v + "d"
    if v.endswith("y") and v[-2] not in "aeiou":
        return v[:-1] + "ied"
    if v in ("stop", "shop", "plan"):
        return v + v[-1] + "ed"
    return v + "ed"


def build_lexicon():
    lex = {}

    def put(word, tag, force=False):
        if force or word not in lex:
            lex[word] = tag

    for tag, words in CLOSED.items():
        for w in words.split():
            put(w, tag, force=True)
    nouns = set(NOUNS)
    verbs = set(VERBS)
    for v in sorted(verbs):
        base_tag = "VB" if (v not in nouns or v in PREFER_VERB) else "NN"
        put(v, base_tag)
        put(third_person(v), "VBZ" if base_tag == "VB" else "NNS")
        put(ing(v), "VBG")
        pa, pp = IRREGULAR_PAST.get(v, (past(v), past(v)))
        if pa:
            put(pa, "VBD")
        if pp:
            put(pp, "VBN")
    for n in sorted(nouns):
        put(n, "NN")
        if n not in MASS:
            put(plural(n), "NNS")
    for a in ADJECTIVES:
        put(a, "JJ")
    for w, t in EXTRA.items():
        put(w, t, force=True)
    for w, t in OVERRIDES.items():
        if t is not None:
            put(w, t, force=True)
    for w, t in PUNCT.items():
        put(w, t, force=True)
    return lex


# Topic clusters for the synthetic embeddings.
TOPICS = {
    "magic": "magic witchcraft wizardry sorcery spell spells wizard wizards witch witches potion potions wand "
             "charm enchantment enchant conjure bewitch mystery mystical magical sorcerer castle dragon owl "
             "broom cauldron curse occult alchemy prophecy miracle magician enchanted mysterious wonder "
             "spellbinding legend quest knight sword",
    "education": "educate education school schools student students teacher teachers teach teaching learn "
                 "learning lesson lessons class knowledge wisdom mind minds brain brains study practice "
                 "practise skill skills training train academy college university scholar tutor mentor "
                 "curriculum exam homework book books reading genius intellect cultivate instruct "
                 "enlighten classroom lecture discipline exercise read scholar think thought idea ideas",
    "youth": "young child children kid kids youth generation nurture grow baby mother father parent "
             "teenager family families",
    "service": "service services serve serving community help helping people volunteer charity care "
               "kindness support duty neighbor society together others friend friends",
    "food": "food pizza bread burger burgers beef cheese sauce taste tastes flavor flavors kitchen cook "
            "cooking bake baked oven recipe meal dinner lunch breakfast delicious fresh hungry appetite "
            "bite eat ingredient ingredients menu chef honey milk butter cake salad fries chicken tomato "
            "dough crust slice grill restaurant sandwich tasty yummy fruit",
    "coffee": "coffee tea cup brew brewed drink water juice soda bean beans morning cafe espresso latte",
    "travel": "travel journey road adventure trip explore world destination flight fly airline ticket "
              "vacation holiday hotel map passport discover wander drive car ride highway sky beach "
              "island distance",
    "technology": "technology computer computers software robot robots machine machines data digital "
                  "network phone innovation code internet device app smart engineer science lab "
                  "automation intelligence algorithm engine battery rocket space galaxy",
    "finance": "money bank save wealth price value business invest investment credit cash account loan "
               "profit market economy pay rich fortune gold wealthiness",
    "health": "health body fitness sport exercise strong strength muscle doctor medicine heal wellness "
              "sleep energy run athlete coach",
    "nature": "nature earth planet tree trees forest sun sky mountain mountains river ocean sea garden "
              "flower flowers rose roses soil farm green wild air rain rainbow sunshine animal dog cat pet",
    "art": "music song sing dance art artist sound voice melody rhythm band guitar piano concert create "
           "creativity imagination imagine paint painting design style cinema film movie camera picture",
    "home": "home house comfort warmth room door bed sofa furniture cozy family",
    "success": "success power victory win winner champion champions greatness excellence leader leaders "
               "lead achieve achievement goal dream dreams ambition glory courage hero",
    "beauty": "beauty fashion style dress clothes shoe shoes skin hair makeup beautiful elegant",
    "joy": "joy happiness love fun smile laugh pleasure delight happy peace passion feeling",
    "time": "time day today tomorrow moment lifetime future second hour year night forever age ages",
    "marketing": "slogan brand advertising marketing product company customer message creative generate "
                 "idea ideas",
}


def build_embeddings(lex, dim=48, seed=20181):
    rng = random.Random(seed)

    def unit():
        v = [rng.gauss(0.0, 1.0) for _ in range(dim)]
        n = math.sqrt(sum(x * x for x in v))
        return [x / n for x in v]

    topic_vecs = {name: unit() for name in sorted(TOPICS)}
    membership = {}
    for name in sorted(TOPICS):
        for w in TOPICS[name].split():
            membership.setdefault(w, []).append(name)
    stop = set(STOPWORDS)
    open_tags = {"NN", "NNS", "NNP", "VB", "VBZ", "VBG", "VBD", "VBN", "VBP", "JJ", "JJR", "JJS", "RB"}
    vocab = sorted(
        w for w, t in lex.items()
        if t in open_tags and w.isalpha() and w not in stop
    )
    for w in membership:
        if w not in lex:
            raise SystemExit(f"topic words missing from lexicon: {sorted(x for x in membership if x not in lex)}")
    def topics_of(w):
        if w in membership:
            return membership[w]
        candidates = [w[:-1], w[:-2], w[:-3] + "y", w[:-3], w[:-3] + "e", w[:-2] + "e", w[:-1] + "e"]
        for c in candidates:
            if c in membership:
                return membership[c]
        return []

    rows = []
    for w in vocab:
        noise = unit()
        topics = topics_of(w)
        if topics:
            v = [0.0] * dim
            for t in topics:
                v = [a + b for a, b in zip(v, topic_vecs[t])]
            v = [a + 0.45 * b for a, b in zip(v, noise)]
        else:
            v = noise
        n = math.sqrt(sum(x * x for x in v))
        v = [3.0 * x / n for x in v]
        rows.append((w, v))
    return rows


def main():
    lex = build_lexicon()
    with open(os.path.join(OUT, "tag_lexicon.tsv"), "w", encoding="utf-8") as f:
        f.write("# word<TAB>PENN_TAG, most frequent tag per word\n")
        for w in sorted(lex):
            f.write(f"{w}\t{lex[w]}\n")
    rows = build_embeddings(lex)
    with open(os.path.join(OUT, "embeddings.txt"), "w", encoding="utf-8") as f:
        f.write(f"{len(rows)} {len(rows[0][1])}\n")
        for w, v in rows:
            f.write(w + " " + " ".join(f"{x:.5f}" for x in v) + "\n")
    with open(os.path.join(OUT, "stopwords.txt"), "w", encoding="utf-8") as f:
        for w in sorted(set(STOPWORDS)):
            f.write(w + "\n")
    print(f"lexicon: {len(lex)} entries, embeddings: {len(rows)} words, stopwords: {len(set(STOPWORDS))}")


if __name__ == "__main__":
    main()
