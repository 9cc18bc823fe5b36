#!/usr/bin/env python3
"""Regenerate the data files under resources/.

Every output is deterministic (sorted, no RNG), so rerunning this script
produces byte-identical files. The lexicon is an original curated list on
the familiar [-4, +4] crowd-rating scale; the vocabulary-level lists are
editable placeholders built from curated base words plus regular
inflections; the bad-words list targets the 1500-1900 entry window the
loaders sanity-check.

Usage: python3 scripts/gen_resources.py [output_dir]
"""

import sys
from pathlib import Path

# ---------------------------------------------------------------------------
# Inflection helpers (mirror the suffix conventions of regular English)
# ---------------------------------------------------------------------------

VOWELS = set("aeiou")


def plural(word: str) -> str:
    if word.endswith(("s", "x", "z", "ch", "sh")):
        return word + "es"
    if word.endswith("y") and len(word) > 1 and word[-2] not in VOWELS:
        return word[:-1] + "ies"
    return word + "s"


def doubles_final(word: str) -> bool:
    # single-syllable CVC heuristic: stop, plan, grab
    if len(word) < 3:
        return False
    a, b, c = word[-3], word[-2], word[-1]
    if c in VOWELS or c in "wxy":
        return False
    if b not in VOWELS or a in VOWELS:
        return False
    return len(word) <= 4


def verb_forms(word: str):
    forms = {word, plural(word)}
    if word.endswith("e") and not word.endswith(("ee", "ye", "oe")):
        forms.add(word[:-1] + "ing")
        forms.add(word + "d")
    elif word.endswith("y") and len(word) > 1 and word[-2] not in VOWELS:
        forms.add(word + "ing")
        forms.add(word[:-1] + "ied")
    elif doubles_final(word):
        forms.add(word + word[-1] + "ing")
        forms.add(word + word[-1] + "ed")
    else:
        forms.add(word + "ing")
        forms.add(word + "ed")
    return forms


def noun_forms(word: str):
    return {word, plural(word)}


def adj_forms(word: str):
    forms = {word}
    if word.endswith("y") and word[-2] not in VOWELS:
        forms.add(word[:-1] + "ily")
    elif word.endswith(("ic",)):
        forms.add(word + "ally")
    elif not word.endswith("ly"):
        forms.add(word + "ly")
    return forms


def expand(entries):
    """entries: iterable of (word, kind) with kind in v/n/a/x (x = no forms)."""
    out = set()
    for word, kind in entries:
        if kind == "v":
            out |= verb_forms(word)
        elif kind == "n":
            out |= noun_forms(word)
        elif kind == "a":
            out |= adj_forms(word)
        else:
            out.add(word)
    return out


# ---------------------------------------------------------------------------
# Sentiment lexicon: curated valences on the [-4, +4] scale.
# Format below: "word kind valence"; kind controls which inflected forms
# inherit the same valence.
# ---------------------------------------------------------------------------

LEXICON_SPEC = """
abandon v -1.9
abuse v -3.2
ache v -1.7
admire v 2.1
adore v 2.9
adventure n 1.3
afraid x -1.9
aggressive a -1.4
agony n -3.0
agree v 1.5
alarm v -1.4
alone x -1.0
amaze v 2.5
amusing a 1.7
anger n -2.7
angry a -2.3
anguish n -2.9
annoy v -1.8
anxious a -1.6
appreciate v 2.0
approve v 1.7
argue v -1.6
ashamed a -2.1
assault v -3.0
attack v -2.6
awful a -2.0
awkward a -1.2
bad x -2.5
badly x -2.1
bane n -1.8
battle n -1.6
beauty n 2.7
beautiful a 2.9
beloved a 2.9
benefit n 1.7
best x 3.2
betray v -3.0
better x 1.9
bitter a -1.8
blame v -1.9
bless v 2.3
blessing n 2.5
bliss n 3.1
bold a 1.3
bore v -1.3
boring a -1.3
brave a 2.1
bright a 1.9
brilliant a 2.8
broken x -1.9
brutal a -3.0
calm a 1.3
care v 1.5
careful a 1.1
careless a -1.4
celebrate v 2.4
champion n 2.2
charm v 1.8
charming a 2.1
cheer v 2.3
cheerful a 2.5
cherish v 2.6
clean a 1.3
clever a 1.9
comfort v 1.9
comfortable a 1.7
compassion n 2.4
confident a 1.8
confuse v -1.3
contempt n -2.2
content a 1.6
courage n 2.2
coward n -2.0
cozy a 1.7
crash v -1.7
crazy a -1.4
cruel a -2.8
cruelty n -2.9
cry v -1.9
curse v -2.2
danger n -2.3
dangerous a -2.1
dark a -0.9
dead x -2.9
deadly a -2.6
dear a 1.8
death n -2.9
defeat v -1.6
delight v 2.7
delightful a 2.8
demon n -2.3
despair n -2.9
desperate a -2.0
destroy v -2.6
devastate v -3.1
devil n -2.5
die v -2.8
dirty a -1.5
disappoint v -2.0
disaster n -2.7
disgust v -2.6
dishonest a -2.2
dismal a -1.9
distress n -2.1
doom n -2.4
doubt v -1.2
dread v -2.3
dream n 1.5
dull a -1.2
eager a 1.5
easy a 1.2
ecstatic a 3.1
elegant a 2.1
embarrass v -1.8
encourage v 2.0
enemy n -2.1
enjoy v 2.2
enthusiasm n 2.2
evil a -3.3
excellent a 3.2
excite v 2.4
exciting a 2.2
fail v -2.1
failure n -2.3
fair a 1.4
faith n 1.9
faithful a 2.0
fame n 1.6
fantastic a 2.9
fascinate v 2.2
fatal a -2.6
favorite a 2.0
fear n -2.2
fearful a -2.0
fierce a -1.3
fight v -1.9
filthy a -2.1
fine a 1.1
flawless a 2.5
foe n -1.7
fond a 1.9
fool n -1.6
foolish a -1.6
forgive v 1.9
fortune n 1.9
fraud n -2.6
free a 1.6
freedom n 2.3
friend n 2.0
friendly a 2.1
fright n -2.1
frighten v -2.2
fun x 2.3
funny a 1.9
furious a -2.6
generous a 2.3
gentle a 1.9
gift n 1.9
glad a 2.0
gloomy a -1.8
glorious a 2.8
glory n 2.3
good x 1.9
grace n 1.9
graceful a 2.0
gracious a 2.1
grand a 2.0
grateful a 2.3
grave a -1.4
greed n -2.2
greedy a -1.9
grief n -2.8
grim a -1.9
gross a -1.9
guilt n -2.0
guilty a -1.9
happiness n 2.9
happy a 2.7
harm v -2.3
harmless a 1.0
harsh a -1.8
hate v -2.7
hatred n -3.1
heal v 1.8
healthy a 1.8
heaven n 2.5
hell n -3.0
help v 1.7
helpful a 1.9
helpless a -1.7
hero n 2.4
hideous a -2.4
honest a 2.0
honor n 2.2
hope v 1.9
hopeful a 2.0
hopeless a -2.2
horrible a -2.5
horror n -2.7
hostile a -2.1
humble a 1.4
hunger n -1.4
hurt v -2.4
ideal a 2.1
idiot n -2.3
ignorant a -1.7
ill a -1.7
improve v 1.8
innocent a 1.4
insane a -1.9
inspire v 2.3
insult v -2.2
intelligent a 2.2
interesting a 1.6
jealous a -1.9
jolly a 2.2
joy n 2.8
joyful a 2.8
kill v -3.4
kind x 2.0
kindness n 2.5
laugh v 2.2
laughter n 2.4
lazy a -1.4
liar n -2.6
lie v -1.9
lonely a -1.8
lose v -1.5
loss n -1.9
lost x -1.4
love v 3.2
lovely a 2.8
loyal a 2.2
luck n 1.8
lucky a 2.1
mad a -2.2
magic n 1.6
magnificent a 3.0
marvelous a 2.9
menace n -2.0
mercy n 1.9
merry a 2.4
mess n -1.4
miracle n 2.8
miserable a -2.5
misery n -2.7
misfortune n -2.1
mistake n -1.6
mock v -1.8
monster n -2.0
mourn v -2.4
murder v -3.7
nasty a -2.5
neat a 1.6
nervous a -1.4
nice a 1.8
noble a 2.1
nuisance n -1.5
offend v -2.0
optimistic a 2.0
outrage n -2.5
pain n -2.5
painful a -2.3
panic n -2.2
paradise n 2.9
peace n 2.4
peaceful a 2.3
perfect a 2.7
peril n -2.2
pessimistic a -1.8
pity n -1.3
play v 1.4
pleasant a 2.2
please v 1.6
pleasure n 2.6
poison n -2.6
polite a 1.8
poor a -1.8
positive a 2.1
praise v 2.4
precious a 2.4
pretty a 2.1
pride n 1.6
prison n -2.1
prize n 2.0
promise v 1.4
protect v 1.8
proud a 2.1
punish v -2.2
pure a 1.7
rage n -2.8
regret v -1.9
rejoice v 2.7
relief n 1.9
rescue v 2.1
resent v -2.0
respect v 2.1
reward n 2.1
rich a 1.9
ridiculous a -1.6
rot v -2.1
rotten a -2.2
rude a -2.0
ruin v -2.3
sad a -2.1
sadness n -2.4
safe a 1.8
satisfy v 1.9
savage a -2.4
save v 2.0
scare v -2.1
scorn v -2.1
scream v -1.9
selfish a -1.9
shame n -2.1
share v 1.4
shine v 1.7
shock v -1.6
sick a -1.9
silly a -0.9
sin n -2.3
sincere a 1.9
slave n -2.6
smart a 1.7
smile v 2.1
sob v -2.0
sorrow n -2.6
sorry x -0.4
special a 1.8
splendid a 2.8
steal v -2.4
stink v -1.9
storm n -1.2
strange a -0.6
strength n 1.7
strong a 1.9
struggle v -1.6
stupid a -2.3
succeed v 2.2
success n 2.7
suffer v -2.5
suffering n -2.6
superb a 3.0
support v 1.6
sweet a 2.1
sympathy n 1.6
tender a 1.8
terrible a -2.1
terrific a 2.7
terrify v -2.7
terror n -3.0
thank v 1.9
thankful a 2.2
threat n -2.2
threaten v -2.3
thrill v 2.3
torment v -2.9
torture v -3.3
tragedy n -2.8
tragic a -2.5
treasure n 2.3
tremble v -1.4
trick v -1.5
triumph n 2.6
trouble n -1.9
true a 1.9
trust v 1.9
ugly a -2.2
unhappy a -2.1
unkind a -1.9
upset a -1.8
useful a 1.7
useless a -1.9
victory n 2.6
villain n -2.4
violence n -3.1
violent a -2.9
war n -2.9
warm a 1.6
waste v -1.6
weak a -1.5
wealth n 1.9
weep v -2.2
welcome v 1.9
wicked a -2.6
win v 2.6
wisdom n 2.1
wise a 2.0
woe n -2.4
wonderful a 2.7
worry v -1.9
worse x -2.3
worst x -3.1
worthless a -2.4
worthy a 1.9
wound v -2.3
wreck v -2.1
wretched a -2.4
wrong a -2.1
yearn v -0.9
zeal n 1.7
handsome a 2.2
great x 3.1
no x -1.2
yes x 1.7
gratitude n 2.3
delicious a 2.4
curious a 1.3
generosity n 2.4
loveliness n 2.6
"""


def parse_lexicon_spec():
    entries = {}
    for line in LEXICON_SPEC.strip().splitlines():
        word, kind, val = line.split()
        entries[(word, kind)] = float(val)
    return entries


def build_lexicon():
    lex = {}
    for (word, kind), val in sorted(parse_lexicon_spec().items()):
        if kind == "v":
            forms = verb_forms(word)
        elif kind == "n":
            forms = noun_forms(word)
        elif kind == "a":
            forms = adj_forms(word)
        else:
            forms = {word}
        for form in sorted(forms):
            lex.setdefault(form, val)
    return lex


# ---------------------------------------------------------------------------
# Bad-words list. Singleton tokens the scorer hard-overrides to -1.0: crude
# profanity, explicit sexual terms, drug slang, slurs. Kept separate from
# ordinary negative vocabulary (kill, war, ...), which belongs in the lexicon.
# The shipped file must land in the 1500-1900 entry window.
# ---------------------------------------------------------------------------

# Polysemous words that are everyday vocabulary in older books (tart, cock,
# queer, tramp, intercourse, faggot-as-firewood, ...) are deliberately left
# out: the override is exact-match and a false positive nukes a whole
# sentence. Plain violence vocabulary (kill, war, blood) belongs in the
# lexicon with negative valences, not here.

BAD_SEEDS_V = """
fuck shit piss bugger shag wank frig toke overdose
molest rape sodomize seduce fondle grope ejaculate masturbate
lynch disembowel eviscerate decapitate garrote
""".split()

BAD_SEEDS_N = """
asshole arsehole bastard bitch whore slut hooker prostitute pimp skank
harlot strumpet hussy floozy trollop courtesan concubine callgirl gigolo
dick prick bellend wanker tosser bollock ballsack nutsack schlong dong
pussy cunt twat minge vulva phallus penis vagina testicle scrotum nipple
boob titty knocker buttock arse anus rectum groin crotch
crap turd pisser shitter crapper orgasm clitoris foreskin smegma
damn dammit goddamn hellhole bullshit horseshit dogshit batshit apeshit
motherfucker fucker fuckhead fuckwit fuckface shithead shitbag shitface
dickhead dickwad dickweed knobhead numbnuts douche douchebag scumbag
dirtbag sleazebag slimeball pervert perv lecher nympho nymphomaniac
sadist masochist voyeur flasher stripper lapdance blowjob handjob rimjob
gangbang bukkake dildo buttplug strapon cumshot creampie deepthroat
sexpot jailbait milf gstring thong panty
porno smut erotica aphrodisiac viagra condom brothel
bordello whorehouse stripclub peepshow fetish dominatrix
orgy threesome foursome foreplay coitus copulation fornication adultery
incest pedophile paedophile pederast rapist molester necrophilia
cocaine heroin meth methamphetamine opium morphine fentanyl ketamine
mdma lsd shrooms peyote mescaline hashish ganja cannabis marijuana
reefer spliff bong stoner pothead junkie methhead cokehead dopehead
pillhead smackhead hophead crackhead narco cartel oxy oxycodone percocet
xanax benzo barbiturate amphetamine pcp tripper
booze liquor hooch drunkard sot boozer wino alky
vodka whiskey bourbon tequila absinthe schnapps keg hangover bender binge
nigger nigga spic wetback kike yid gook chink jap wop dago kraut polack
raghead towelhead redskin injun coon darkie sambo honky gringo
dyke homo tranny shemale retard spaz mongoloid
midget psycho schizo nutcase nutjob wacko
hooligan thug goon hoodlum gangster mobster mafioso yakuza triad
skinhead neonazi klansman jihadi terrorist
slag slapper munter minger chav pikey yob oik pillock plonker
prat berk twit twerp moron cretin dimwit nitwit dipstick
bonehead knucklehead meathead airhead butthead lardass fatso tubbo
gasbag windbag blowhard
""".split()

BAD_SEEDS_X = """
fucking fucked sexy horny kinky raunchy sleazy smutty xxx x-rated r-rated
nsfw hardcore softcore topless nude buck-naked stark-naked
boozy sloshed blotto legless paralytic sozzled tipsy blitzed
tweaking strung-out spaced-out doped-up coked-up cracked-out geeked
jonesing detoxing relapsing goddamned
carnal lecherous lascivious licentious libidinous lustful
priapic onanistic autoerotic homoerotic sadomasochistic
motherfucking shitty shittier shittiest crappy crappier crappiest pissy
fck fuk fcuk phuck fux feck fecking wtf stfu lmfao
sexting upskirt pantyless braless
""".split()

# Crude compounds on the pattern real blocklists carry in bulk. These are
# unambiguous: none of them collide with ordinary literary vocabulary.
COMPOUND_STEMS = """
shit fuck piss crap dick arse ass wank turd cum jizz spunk douche smut
porn whore slut skank
""".split()

COMPOUND_PARTS = """
bag bags head heads face faces hole holes wad wads weasel weasels stain
stains storm storms show shows fest fests load loads brain brains brained
house houses hound hounds monger mongers bucket buckets canoe canoes rag
rags lord lords king kings queen queens machine machines factory
goblin goblins gremlin gremlins nugget nuggets
""".split()


def build_bad_words():
    words = set()
    for w in BAD_SEEDS_V:
        words |= verb_forms(w)
        words.add(w + "er")
        words.add(w + "ers")
    for w in BAD_SEEDS_N:
        words |= noun_forms(w)
    for w in BAD_SEEDS_X:
        words.add(w)
    for stem in COMPOUND_STEMS:
        for part in COMPOUND_PARTS:
            words.add(stem + part)
    return words


# ---------------------------------------------------------------------------
# Vocabulary-level placeholder lists. Editable; regenerate or replace freely.
# ---------------------------------------------------------------------------

MID_V = """
absorb accomplish accuse achieve acquire adapt adjust admit advise analyze
announce apologize applaud apply appoint approach arrange assemble assign
assist assume astonish attach attempt attend attract avoid balance banish
behave blend boast borrow bounce calculate capture classify collapse collect
combine command communicate compare compete complain complete compose
conclude conduct confess confirm connect conquer consider consist construct
consult consume contain continue contribute convince cooperate correspond
crumble cultivate debate decay deceive declare decorate decrease dedicate
defend define demand demonstrate deny depart depend describe deserve design
detect determine develop devote differ digest direct disagree discover
discuss dissolve distribute disturb divide donate drift earn echo edit
educate elect embrace emerge employ enable enclose endure enforce engage
enlarge enrich enroll ensure entertain equip establish estimate evaporate
examine exchange exclaim exist expand expect experiment explain explore
express extend faint fasten flatter float fold forbid force found gather
gaze glance glow govern grasp greet grind guard guide harvest haul heave
hesitate hollow host hover identify illustrate imagine imitate import
impress include increase indicate inform inhabit inherit inquire insist
inspect install instruct intend interrupt introduce invade invent invest
investigate invite involve journey judge justify kneel label launch lean
lecture limp linger locate lodge magnify maintain manage measure mention
merge migrate mingle multiply murmur navigate neglect negotiate nod notice
object oblige observe obtain occupy occur operate oppose organize originate
overcome overflow overlook owe pan parade pardon participate peer perform
permit persuade pierce pinch plead plunge polish ponder possess postpone
pounce predict prefer prepare preserve pretend prevent proceed produce
pronounce propose protest prove provide publish purchase pursue qualify
quarrel quote rattle react rebel recall receive recite recognize recommend
recover reduce refer reflect refuse register regulate relate release rely
remain remark remind remove repair repeat replace reply report represent
request require resemble reserve resist resolve respond restore retire
retreat reveal review revise roam rumble rustle sacrifice salute scamper
scatter scold scoop scramble scrape seek seize select separate settle
shiver shudder sigh signal sketch slither smuggle soar solve spare sprawl
sprint squint stagger starve stumble submit succeed suggest summon supply
suppose surround survey survive suspect swarm sway swoop tackle tame tend
testify thrive tilt toil trace trail transfer translate transport tread
trudge tumble twirl unite urge vanish venture volunteer wade wander whirl
wince witness wither wobble yield
""".split()

MID_N = """
absence accident account accuracy achievement acquaintance adventure agency
agreement agriculture altitude ambition amount ancestor anxiety apparatus
appearance appetite applause appointment architecture argument arrival
article assembly assistance astronomy atmosphere attention attitude audience
author authority avalanche average bacteria baggage balance bargain barrier
basin bazaar beacon behavior benefit beverage biography blizzard blossom
boundary bravery breeze brilliance bulletin bundle burden cabinet calendar
campaign canal candidate canyon capacity caravan carriage category cattle
caution cavern celebration century ceremony champion channel chapter
character charity chemistry circumstance citizen civilization climate
collection college column comfort commerce committee community companion
comparison compass competition complaint compliment conclusion condition
conference confidence conflict congress conscience consequence constitution
continent contract contrast convention conversation council courage courtesy
creature crisis criticism culture currency current curtain custom damage
darkness daughter decade decision declaration defect delay delight delivery
democracy departure deposit depth desert destination destruction detail
device dialogue diameter diary dignity direction disaster discipline
discount discovery discussion disease disguise distance district document
domain drought duty economy edge edition education effect effort election
element elevation emergency emotion emperor empire employment enemy energy
engine engineer entrance envelope environment episode equator equipment
errand error escape essay estate event evidence examination example
excellence exception excitement excursion excuse exercise exhibit existence
expedition expense experience experiment expert explanation explosion
export expression extent fabric factor factory faculty familiarity family
famine fashion fatigue feature festival fiction figure flavor fleet
fortnight fortress fortune fountain fraction fragment framework frequency
friendship frontier function furnace furniture future galaxy gallery
garment gasoline generation geography geometry gesture glacier glimpse
government grammar granite gratitude gravity grocery growth habit harbor
hardship harmony harvest hazard height heritage hesitation history horizon
hospital humor hurricane hydrogen identity illness image imagination
importance impression improvement incident income independence industry
influence information ingredient injury innocence insect instance instant
instinct institute instruction instrument insurance intelligence intention
interest interior interval interview invention invitation island item
jewel journal journey judgment junction jungle justice kingdom knowledge
laboratory labor language lantern latitude launch lecture legend leisure
length lesson level liberty library license lightning limestone limit
liquid literature location longitude luggage lumber luxury machine
machinery magazine magnet majority manner mansion manufacture margin
material mathematics matter maximum meadow meaning meantime measure
mechanic medicine medium member memory merchant message metal meteor
method midnight mineral minimum minister minority minute miracle mischief
mission mixture moisture moment monarch monument mood motion motive motor
mountain multitude muscle museum music mystery nation nature necessity
neighbor nephew nerve network niece nitrogen notion novel nuisance number
object observation obstacle occasion occupation ocean offer office official
opinion opportunity opposition orbit orchard orchestra order organ
organization origin ornament outcome outline output oxygen package
paragraph parallel parcel parliament passage passenger passion pasture
patience pattern pause payment peasant pebble peninsula percent period
permission person personality perspective petroleum philosophy phrase
physician pioneer pity planet plastic platform pleasure plenty poem poetry
policy politics pollution population portion position possession
possibility poverty powder practice prairie precaution presence president
pressure principal principle priority privilege problem procedure process
procession product profession professor profit program progress project
promise pronunciation proof property proportion proposal prosperity
protection province public publication punishment pupil purpose pyramid
quality quantity quarter question quiver rainbow ranch range rate ratio
reality reason recipe recognition record recreation reference reflection
reform refuge region regret relation relationship relief religion remainder
remark remedy rent repair reply reputation request research reserve
residence resident resource respect response responsibility restaurant
result revenge review revolution reward rhythm riddle ridge route routine
rubbish rumor salary sample satellite satisfaction scale scene schedule
scheme scholar science scientist season section security selection senate
sensation sentence sequence series service session settlement shadow
shelter shortage signal significance silence site situation skeleton
sketch skill slope society soldier solution sorrow source souvenir space
species specimen spectacle speech spirit splendor sponge sponsor square
stadium standard statement station statue status steam strategy strength
structure student substance suburb success suggestion summit supply
support surface surgeon surprise surrender survey suspense syllable symbol
sympathy system talent tax technique technology telescope temperature
temple tendency tension term territory texture theater theme theory
thread threat thunder tide timber tissue title tone topic tournament
tradition traffic tragedy trail transportation treason treatment treaty
tremor trial triangle tribe tribute trifle triumph tropic tunnel twilight
type union unit universe university uproar valley value vapor variety
vehicle velocity verse version vessel victim victory village violence
virtue vision visitor vocabulary volcano volume voyage wagon wealth weapon
weather welfare wilderness wisdom witness wonder workshop worth wreckage
zone
""".split()

MID_A = """
absent absurd abundant accurate active actual additional adequate admirable
advanced adventurous affectionate aged alert alike amazing ancient angry
annual anxious apparent appropriate artificial ashamed astonishing athletic
attractive automatic available average awkward bare bashful bitter bold
brilliant brisk broad capable careless cautious central certain cheerful
chief chilly circular civil classic clever clumsy coarse comfortable
common compact complete complex considerable constant content convenient
cordial correct courageous courteous crafty crisp critical crude curious
current damp daring decent definite delicate delicious dense dependent
desperate determined different difficult digital dim distant distinct
double doubtful dramatic drowsy dull eager earnest eastern educated
effective efficient elaborate elastic elderly electric elegant emotional
enormous entire equal essential eternal even eventual evident exact
excellent exceptional excessive expensive experienced expert external
extinct extraordinary extreme faint familiar famous fatal favorable feeble
fertile fierce final financial firm flexible fluent fond foreign formal
former fortunate fragile frank frequent fresh frosty fundamental furious
further gallant general generous genuine gigantic glorious golden gradual
grand grateful grave grim gross guilty handy hardy harmless harsh hasty
hazy healthy hearty hollow hostile humble humid identical idle ignorant
immediate immense incredible independent industrial inferior initial inner
innocent intelligent intense internal invisible jagged jealous keen
latter legal lengthy level liable liberal likely limited literary lively
local logical lonesome loyal magnificent major mature maximum mechanical
medical medium mental mere merry mighty mild miniature minor miserable
moderate modern modest moist moral mutual mysterious narrow native natural
naughty necessary negative nervous neutral noble normal northern notable
numerous obedient obvious occasional odd official opposite ordinary
original outer outstanding overall parallel partial particular passive
patient peculiar perfect permanent persistent personal physical plain
pleasant plural polar polite political popular portable positive possible
practical precious precise previous primary primitive principal private
probable productive professional prominent prompt proper prosperous proud
public punctual pure quaint qualified rapid rare raw ready real reasonable
recent regular reliable remarkable remote responsible restless rigid ripe
rival robust rough royal rural rusty sacred secure senior sensible
sensitive separate serious severe shallow sheer significant silent similar
sincere singular slender slight social solar solemn solid solitary sore
southern spare special specific splendid stale standard steady steep stern
stiff still strict stubborn substantial subtle sufficient suitable sullen
superior supreme swift technical temporary tender tense thorough thoughtful
tidy timid total tough tremendous tropical typical ultimate uneasy uniform
unique universal unusual upright urban urgent useful usual vacant vague
vain valuable various vast vertical victorious vigorous violent visible
vital vivid vocal western wholesome wicked wise wooden worthy wretched
""".split()

HIGH_V = """
abate abdicate abhor abridge abscond absolve abstain accede acclimate
accost accrue adjudicate admonish adulterate advocate aggrandize aggregate
alienate alleviate allocate allude amalgamate ameliorate amortize annex
annihilate annotate antagonize appease apprehend appropriate arbitrate
articulate ascertain aspire assimilate assuage atone atrophy attest
augment authenticate avert beguile belabor beleaguer belie belittle
bemoan bequeath berate beseech besiege bestow bifurcate blaspheme bolster
bombard buttress cajole calibrate capitulate captivate castigate catalyze
censure chastise circumscribe circumvent coalesce coerce cogitate cohere
collaborate commandeer commemorate commiserate compel complement comply
concede conciliate concoct concur condescend condone confer confide
confiscate conflate confound congregate conjecture connive consecrate
console consolidate conspire constrain construe contemplate contend
contravene converge convey corroborate counteract culminate curtail
debilitate debunk decimate decree deduce defame defer degrade deify
delegate delineate delude demean demystify denigrate denote denounce
deplete deplore depreciate deride designate desist deter detract devise
dictate digress discern discredit disdain disparage dispel disperse
disseminate dissent dissipate dissuade distill diverge divest divulge
dwindle eclipse elicit elucidate elude emanate embellish embezzle embody
emulate enact encompass encroach endow engender engulf enthrall entice
entreat enumerate envisage epitomize eradicate espouse evoke exacerbate
exalt exasperate excavate exemplify exhort exonerate expedite expound
expunge extol extradite extrapolate fabricate facilitate fathom feign
flounder foment forestall forgo formulate forsake fortify foster galvanize
garner germinate gesticulate grapple gravitate harangue harass heed
hypothesize immerse impair impart impede imperil implicate implore imply
improvise impugn inaugurate incite incur indoctrinate induce infer
infiltrate infringe inhibit insinuate instigate insulate interject
interrogate intervene intimate intimidate inundate invoke jeopardize
juxtapose lament languish legislate liberate loathe lull malign mandate
marshal meander mediate mitigate mollify muse mystify negate nullify
obfuscate obliterate obscure obviate officiate ordain oscillate ostracize
oust pacify perjure permeate perpetuate persevere peruse pervade placate
plummet pontificate portend postulate preclude predispose preempt presage
prevaricate proclaim procure proliferate promulgate propagate proscribe
protract provoke quell quench ratify rebuke rebut recant reciprocate
reconcile rectify redress refute reiterate relegate relinquish remunerate
renounce repudiate rescind resonate retract revere revoke sanction satiate
scrutinize sequester squander stagnate stipulate subjugate sublimate
subordinate subside substantiate subvert supersede supplant surmise
surmount tantalize temper thwart transcend transgress traverse truncate
undermine underscore undulate usurp vacillate validate vanquish venerate
vex vindicate waive wallow waver wrangle
""".split()

HIGH_N = """
aberration abomination acumen adversary adversity aesthetics affectation
affinity affliction affluence aggression alacrity albatross alchemy
allegory allusion altruism ambiguity ambivalence amenity anachronism
analogy anarchy anecdote animosity anomaly antagonism antithesis apathy
aperture apex aplomb apparition archetype ardor aristocracy artifice
ascendancy asceticism aspersion assonance attrition audacity austerity
autonomy avarice aversion axiom behemoth benevolence bourgeoisie brevity
bulwark bureaucracy cacophony calamity candor caprice catalyst catharsis
censure chicanery cognition complacency conflagration conjecture
connoisseur consensus consternation constituency contempt contingency
conundrum convergence conviction cornucopia corollary credence criterion
culmination cupidity custody debacle dearth debauchery decorum deference
demagogue demeanor denizen depravity despot destitution dexterity
dichotomy dilemma diligence discord discrepancy disdain disparity
dissonance doctrine dogma duplicity duress ebullience eccentricity
efficacy effigy elocution eloquence empathy enigma enmity ennui entourage
epiphany epitaph epithet epoch equanimity equilibrium equity estrangement
euphemism euphoria exodus expediency exposition facade fallacy fealty
fervor fidelity finesse fortitude fruition furor gentry grandeur gravitas
gumption hegemony heresy hiatus hierarchy homage hubris hypocrisy hysteria
iconoclast ideology idiosyncrasy ignominy impasse impetus impunity
inception incumbent indignation inertia infamy influx innuendo insolence
integrity intuition invective irony jargon jeopardy jurisdiction
juxtaposition kudos labyrinth larceny largesse legacy legion lethargy
levity lexicon litany litigation longevity lassitude magnate magnitude
malaise malefactor malice mandate mantra martyr maxim melancholy
metamorphosis metaphor microcosm milieu modicum momentum monotony
moratorium mores mystique nadir narcissism nemesis neophyte nonchalance
nostalgia notoriety nuance oblivion obscurity omen onslaught opulence
oratory orthodoxy ostentation oxymoron panacea paradigm paradox paragon
parity parody pathos patriarch patron paucity pedigree penchant penance
perdition perfidy perjury pernicious perusal pessimism phenomenon
philanthropy pinnacle pittance platitude plaudit plethora poignancy
polemic posterity pragmatism precedent precipice predicament premise
premonition prerogative pretense privation probity proclivity prodigy
profundity progeny prognosis proletariat proliferation propensity
propriety protagonist protocol provocation prowess proximity prudence
pseudonym purview quagmire qualm quandary quintessence rancor rapport
ratification rationale recalcitrance reciprocity recompense rectitude
redemption regalia relic remnant remorse renaissance renown reparation
repertoire reprieve reprisal repute requiem requisite resilience resolve
respite restitution reticence retribution reverence rhetoric rigor
sagacity salutation sanctuary sanction sarcasm satire scourge scrutiny
semblance serendipity servitude solace solidarity soliloquy sophistry
sovereignty spectrum stalwart stigma stipend stoicism stratagem stupor
subjugation subsidy subterfuge succession suffrage supposition surrogate
sycophant symmetry synopsis synthesis temerity tenacity tenet tenure
testament theology threshold tirade torpor totalitarianism tranquility
transgression travesty trepidation tribunal tribulation turbulence
turmoil tutelage tyranny ubiquity ultimatum umbrage unanimity upheaval
utopia vanguard vehemence vendetta veneer veracity verbosity vestige
vicissitude vigilance vigor virtuoso vitality vitriol vocation volition
voracity wanderlust wariness watershed zealot zenith zephyr
""".split()

HIGH_A = """
abetting aberrant abject abstruse acerbic acquiescent acrimonious adamant
adroit aesthetic affable aloof altruistic ambiguous ambivalent amenable
amiable amorphous anachronistic analogous anomalous antithetical apathetic
apocryphal arbitrary arcane archaic arduous articulate ascetic assiduous
astute audacious auspicious austere avuncular banal bellicose belligerent
benevolent benign blithe bombastic boorish brazen bucolic bumptious
burgeoning byzantine cacophonous callous candid cantankerous capacious
capricious caustic censorious cerebral chimerical circuitous circumspect
clairvoyant clandestine coherent colloquial commensurate compendious
complacent complicit compulsory conciliatory concomitant condescending
congenial congruent consummate contentious contrite conventional copious
cosmopolitan covert craven credulous cryptic culpable cumulative cursory
daunting dauntless dearth debonair decadent decorous deferential deft
deleterious demure derelict derivative derogatory desolate despondent
despotic destitute desultory diaphanous didactic diffident dilatory
diligent diminutive discerning discordant discreet disingenuous disparate
dispassionate distraught docile dogmatic dormant dour draconian dubious
duplicitous ebullient eclectic edifying efficacious effusive egalitarian
egregious elegiac eloquent elusive eminent empirical endemic enigmatic
ephemeral equivocal erratic erudite esoteric evanescent exacting exemplary
exhaustive exigent exorbitant expedient explicit extant extraneous
exuberant facetious fallacious fastidious fatuous fecund felicitous feral
fervent fickle flagrant fledgling flippant florid forlorn formidable
fortuitous fractious fraught frugal furtive futile garrulous glib
grandiose gratuitous gregarious hackneyed hapless harrowing haughty
hedonistic heinous heretical hermetic histrionic homogeneous iconoclastic
idiosyncratic idyllic ignominious illicit illustrious immaculate imminent
immutable impartial impassive impeccable impecunious imperious impervious
impetuous implacable implicit impromptu inadvertent inane incessant
inchoate incisive incontrovertible incorrigible incredulous indefatigable
indelible indigenous indignant indolent indomitable ineffable inept inert
inexorable infallible infamous ingenious ingenuous inimical inimitable
innate innocuous inordinate insatiable inscrutable insidious insipid
insolent insular intractable intransigent intrepid intrinsic inveterate
invidious irascible irrefutable irreverent itinerant jaded jubilant
judicious laconic languid latent laudable lavish lethargic limpid lithe
loquacious lucid lugubrious luminous magnanimous malevolent malleable
maudlin mawkish mellifluous mercurial meticulous mirthful miserly mundane
munificent myopic nascent nebulous nefarious noisome nominal nonchalant
notorious novel noxious obdurate obsequious obsolete obstinate obtuse
odious officious ominous onerous opaque opulent ornate orthodox
ostentatious palatable palpable paltry paramount parochial parsimonious
pedantic pejorative pellucid penitent pensive peremptory perennial
perfunctory pernicious perspicacious pertinent petulant philanthropic
phlegmatic pious pithy placid platonic plausible pliable poignant
polemical ponderous portentous pragmatic precarious precocious predominant
presumptuous pretentious prevalent pristine prodigal prodigious profane
proficient profligate profound prolific prosaic prostrate provincial
prudent puerile pugnacious punctilious quaint querulous quiescent
quixotic quotidian rampant rancorous rapacious rarefied recalcitrant
reclusive redolent redoubtable refractory relentless remiss replete
reprehensible resilient resolute resplendent reticent reverent rhapsodic
ribald rife rudimentary ruminative sacrosanct sagacious salient salubrious
sanctimonious sanguine sardonic scathing scintillating scrupulous
sedentary seditious sedulous seminal sententious serene servile shrewd
sinuous skeptical solicitous somber soporific sordid spurious staid
stalwart static statutory stoic stolid strident stringent sublime
subservient subtle succinct sullen sumptuous supercilious superfluous
surly surreptitious sycophantic taciturn tangential tangible tantamount
tedious temperate tenable tenacious tentative tenuous tepid terse
threadbare timorous torpid tortuous tranquil transient trenchant trite
truculent turbid turbulent turgid ubiquitous unctuous unflappable
untenable untoward urbane vacuous vapid vehement venal venerable verbose
verdant vexatious viable vicarious vigilant vindictive virulent viscous
vociferous volatile voluble voracious wan wanton wary whimsical willful
wistful wry zealous
""".split()


def build_level_list(verbs, nouns, adjs):
    out = set()
    out |= expand((w, "v") for w in verbs)
    out |= expand((w, "n") for w in nouns)
    out |= expand((w, "a") for w in adjs)
    return out


# ---------------------------------------------------------------------------
# Stopwords: pronouns, conjunctions, prepositions, articles, auxiliaries.
# ---------------------------------------------------------------------------

STOPWORDS = """
a about above after again against all am an and any are aren't as at be
because been before being below between both but by can cannot can't could
couldn't did didn't do does doesn't doing don't down during each few for
from further had hadn't has hasn't have haven't having he he'd he'll he's
her here here's hers herself him himself his how how's i i'd i'll i'm i've
if in into is isn't it it's its itself let's me more most mustn't my myself
no nor not of off on once only or other ought our ours ourselves out over
own same shan't she she'd she'll she's should shouldn't so some such than
that that's the their theirs them themselves then there there's these they
they'd they'll they're they've this those through to too under until up
upon very was wasn't we we'd we'll we're we've were weren't what what's
when when's where where's which while who who's whom why why's with won't
would wouldn't you you'd you'll you're you've your yours yourself yourselves
shall thou thee thy thine ye
""".split()

# ---------------------------------------------------------------------------
# Abbreviations that do not end a sentence when followed by a period.
# ---------------------------------------------------------------------------

ABBREVIATIONS = """
mr mrs ms dr prof rev fr st ave blvd rd mt ft jr sr gen col capt lt sgt maj
gov pres sen rep hon messrs mme mlle vol ch pp ed etc vs approx dept est
fig inc ltd co corp oz lb lbs hr min sec jan feb mar apr jun jul aug sep
sept oct nov dec mon tue tues wed thu thurs fri sat sun
""".split()

# ---------------------------------------------------------------------------
# Irregular surface -> lemma pairs, plus s-final words the plural rules
# must leave alone (mapped to themselves).
# ---------------------------------------------------------------------------

IRREGULARS = {
    # be / have / do / go
    "am": "be", "is": "be", "are": "be", "was": "be", "were": "be",
    "been": "be", "being": "be",
    "has": "have", "had": "have", "having": "have",
    "does": "do", "did": "do", "done": "do", "doing": "do",
    "goes": "go", "went": "go", "gone": "go", "going": "go",
    # common irregular verbs (past / participle / -ing where tricky)
    "ate": "eat", "eaten": "eat", "bore": "bear", "born": "bear",
    "borne": "bear", "beat": "beat", "beaten": "beat", "became": "become",
    "become": "become", "began": "begin", "begun": "begin", "bent": "bend",
    "bet": "bet", "bound": "bind", "bit": "bite", "bitten": "bite",
    "bled": "bleed", "blew": "blow", "blown": "blow", "broke": "break",
    "broken": "break", "bred": "breed", "brought": "bring",
    "built": "build", "burnt": "burn", "burst": "burst", "bought": "buy",
    "caught": "catch", "chose": "choose", "chosen": "choose",
    "clung": "cling", "came": "come", "cost": "cost", "crept": "creep",
    "cut": "cut", "dealt": "deal", "dug": "dig", "drew": "draw",
    "drawn": "draw", "dreamt": "dream", "drank": "drink", "drunk": "drink",
    "drove": "drive", "driven": "drive", "dwelt": "dwell", "dying": "die",
    "fell": "fall", "fallen": "fall", "fed": "feed", "felt": "feel",
    "fought": "fight", "found": "find", "fled": "flee", "flung": "fling",
    "flew": "fly", "flown": "fly", "forbade": "forbid",
    "forbidden": "forbid", "forgot": "forget", "forgotten": "forget",
    "forgave": "forgive", "forgiven": "forgive", "froze": "freeze",
    "frozen": "freeze", "got": "get", "gotten": "get", "gave": "give",
    "given": "give", "grew": "grow", "grown": "grow", "hung": "hang",
    "heard": "hear", "hid": "hide", "hidden": "hide", "hit": "hit",
    "held": "hold", "hurt": "hurt", "kept": "keep", "knelt": "kneel",
    "knew": "know", "known": "know", "laid": "lay", "led": "lead",
    "leant": "lean", "leapt": "leap", "learnt": "learn", "left": "leave",
    "lent": "lend", "let": "let", "lain": "lie", "lying": "lie",
    "lit": "light", "lost": "lose", "made": "make", "meant": "mean",
    "met": "meet", "mistook": "mistake", "mistaken": "mistake",
    "mown": "mow", "paid": "pay", "put": "put", "quit": "quit",
    "read": "read", "rode": "ride", "ridden": "ride", "rang": "ring",
    "rung": "ring", "rose": "rise", "risen": "rise", "ran": "run",
    "said": "say", "saw": "see", "seen": "see", "sought": "seek",
    "sold": "sell", "sent": "send", "set": "set", "sewn": "sew",
    "shook": "shake", "shaken": "shake", "shone": "shine", "shot": "shoot",
    "showed": "show", "shown": "show", "shrank": "shrink",
    "shrunk": "shrink", "shut": "shut", "sang": "sing", "sung": "sing",
    "sank": "sink", "sunk": "sink", "sat": "sit", "slew": "slay",
    "slain": "slay", "slept": "sleep", "slid": "slide", "slung": "sling",
    "smelt": "smell", "sowed": "sow", "sown": "sow", "spoke": "speak",
    "spoken": "speak", "sped": "speed", "spelt": "spell", "spent": "spend",
    "spilt": "spill", "spun": "spin", "spat": "spit", "split": "split",
    "spoilt": "spoil", "spread": "spread", "sprang": "spring",
    "sprung": "spring", "stood": "stand", "stole": "steal",
    "stolen": "steal", "stuck": "stick", "stung": "sting",
    "stank": "stink", "strode": "stride", "struck": "strike",
    "strove": "strive", "striven": "strive", "swore": "swear",
    "sworn": "swear", "swept": "sweep", "swam": "swim", "swum": "swim",
    "swung": "swing", "took": "take", "taken": "take", "taught": "teach",
    "tore": "tear", "torn": "tear", "told": "tell", "thought": "think",
    "threw": "throw", "thrown": "throw", "thrust": "thrust",
    "trod": "tread", "understood": "understand", "undertook": "undertake",
    "undertaken": "undertake", "woke": "wake", "woken": "wake",
    "wore": "wear", "worn": "wear", "wove": "weave", "woven": "weave",
    "wept": "weep", "won": "win", "wound": "wind", "withdrew": "withdraw",
    "withdrawn": "withdraw", "wrung": "wring", "wrote": "write",
    "written": "write", "tying": "tie", "saying": "say", "seeing": "see",
    # irregular nouns
    "men": "man", "women": "woman", "children": "child", "mice": "mouse",
    "feet": "foot", "teeth": "tooth", "geese": "goose", "oxen": "ox",
    "lice": "louse", "wives": "wife", "lives": "life", "knives": "knife",
    "leaves": "leaf", "loaves": "loaf", "thieves": "thief",
    "shelves": "shelf", "wolves": "wolf", "halves": "half",
    "calves": "calf", "selves": "self", "elves": "elf",
    "scarves": "scarf", "hooves": "hoof", "sheaves": "sheaf",
    # s-final words the plural rules must not touch
    "this": "this", "his": "his", "its": "its", "ours": "ours",
    "yours": "yours", "hers": "hers", "theirs": "theirs", "whose": "whose",
    "always": "always", "perhaps": "perhaps", "besides": "besides",
    "towards": "towards", "sometimes": "sometimes", "unawares": "unawares",
    "news": "news", "series": "series", "species": "species",
    "crisis": "crisis", "basis": "basis", "analysis": "analysis",
    "lens": "lens", "chaos": "chaos", "atlas": "atlas", "canvas": "canvas",
    "christmas": "christmas", "alas": "alas", "gas": "gas", "bias": "bias",
    "iris": "iris", "oasis": "oasis", "emphasis": "emphasis",
    "tennis": "tennis", "trellis": "trellis", "pelvis": "pelvis",
    "axis": "axis", "yes": "yes", "molasses": "molasses",
    "mathematics": "mathematics", "physics": "physics",
    "politics": "politics", "measles": "measles", "scissors": "scissors",
    "trousers": "trousers", "clothes": "clothes", "stairs": "stair",
    "whereas": "whereas", "ides": "ides", "kudos": "kudos",
    "aegis": "aegis", "ethos": "ethos", "pathos": "pathos",
}

# ---------------------------------------------------------------------------
# Everyday base forms for the lemmatizer guard, beyond what the other lists
# already provide.
# ---------------------------------------------------------------------------

COMMON_WORDS = """
able act add address afternoon age air allow animal answer appear apple
area arm army arrive art ask autumn baby back bag ball band bank bar barn
base basket bath bay beach bean bear beat bed bee begin bell belong belt
bench bend bird birth bite black block blood blow blue board boat body boil
bone book boot born boss bottle bottom bowl box boy brain branch bread
break breakfast breath breathe brick bridge bring brother brown brush build
burn burst bush business busy butter button buy cake call camp cap capital
captain car card carry case cast cat catch cause cave cell cent center
chain chair chalk chance change charge chase cheap check cheese chest chew
chicken child chin choice choose church circle city clap class claw clay
clear climb clock close cloth cloud club coal coast coat coin cold color
come common company cook cool copper copy corn corner cotton count country
course cousin cover cow crack cream creek crew crop cross crowd crown cup
cushion cut dance date day deal decide deep deer desk dig dinner dish
distance doctor dog dollar door dot down drag draw dress drink drive drop
dry duck dust ear early earth east eat egg end enjoy enter evening ever
every eye face fact fall false farm farmer fast fat father feed feel fence
field fifth fill film find finger finish fire first fish fit five fix flag
flash flat floor flour flow flower fly fog follow food foot forest forget
fork form fort forward four fox frame fresh frog front fruit full game
garden gate get girl give glass goat gold grain grass gray green ground
group grow guess gun hair half hall hand hang happen hard hat head hear
heart heat heavy hide high hill hold hole home hook hop horn horse hot
hotel hour house hundred hunt hurry ice inch iron jar job join jump keep
key kick king kiss kitchen kite knee kneel knife knock know lady lake lamp
land large last late laugh lay lead leaf learn leather leave leg lemon
letter lift light like line lion lip list listen little live long look
lord lot loud low lunch mail main make man many map mark market master
match matter meal mean meat meet middle mile milk mill mind mine miss mix
money monkey month moon morning mother mouse mouth move much mud name near
neck need needle nest net new next night nine north nose note nothing now
nurse nut oak ocean offer oil old one open orange order out outside oven
owl own page paint pair pan paper parent park part party pass past path
pay pen pencil penny pick picture pie piece pig pile pin pine pink place
plan plane plant plate point pond pony pool post pot pour press price
print pull push put queen quick quiet rabbit race rain raise ranch reach
ready red rest rice rich ride right ring rise river road rock roll roof
room root rope round row rub rug rule run rush sail salt sand say school
sea seat second see seed seem sell send sense serve seven sew shade shape
sheep shell ship shirt shoe shop shore short show side sign silver sing
sister sit six size skin sky sleep slide slip slow small smell smoke snake
snow soap sock soft soil son song sort sound soup south speak spell spend
spill spin spot spread spring stand star start state stay steam steel step
stick stone stop store story street stretch string study subject sugar
suit summer sun table tail take talk tall taste tea teach team tear tell
ten tent test thing think third thousand three throw tie time tin tiny
tire today toe tomorrow tone tongue tool tooth top touch town toy track
trade train travel tree trip truck turn twist two uncle under use view
visit voice wait wake walk wall want wash watch water wave way wear week
weigh west wet wheat wheel white wide wife wild will wind window wing
winter wire wish wood wool word work world wrap write yard year yellow
young
hop hope plan plot rub drip grin slam trim snap chat wag nod pat pet dim
rob jog skip clip grip strip flip whip trot swat stir blur char scar star
bake bathe blame carve chase dine fade gaze glide grade hate hike invite
joke move note pave poke praise prove quote rake rate save scrape serve
shake shave slice smile snore spare stare store tame trade vote wade wave
whine wipe amuse argue arrive behave believe breathe bounce balance blaze
capture change charge circle damage dangle decorate describe deserve
divide educate escape examine excite explore figure force gather giggle
glance handle imagine judge juggle manage measure notice operate pause
pierce practice promise puzzle realize receive refuse relate remove rescue
retire rumble scramble settle shelter shuffle sneeze sparkle squeeze
stumble tangle tickle tremble trouble tumble twinkle wander whisper
whistle wiggle wrestle wrinkle
"""


def build_dictionary():
    """Base forms only: inflected entries would defeat the lemmatizer's
    surface-is-already-a-base-form guard."""
    words = set(COMMON_WORDS.split())
    words |= set(STOPWORDS)
    words |= {word for word, _ in parse_lexicon_spec()}
    words |= set(MID_V) | set(MID_N) | set(MID_A)
    words |= set(HIGH_V) | set(HIGH_N) | set(HIGH_A)
    words |= set(IRREGULARS.values())
    words |= {w for w in BAD_SEEDS_V + BAD_SEEDS_N if "-" not in w}
    return {w for w in words if w}


def write_list(path: Path, header: str, words):
    lines = [f"# {header}"]
    lines += sorted(words)
    path.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"{path}: {len(words)} entries")


def main():
    out_dir = Path(sys.argv[1]) if len(sys.argv) > 1 else Path("resources")
    out_dir.mkdir(parents=True, exist_ok=True)

    lexicon = build_lexicon()
    lines = ["# token<TAB>valence, crowd-style scale [-4, +4]"]
    for word in sorted(lexicon):
        lines.append(f"{word}\t{lexicon[word]}")
    (out_dir / "sentiment_lexicon.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"{out_dir / 'sentiment_lexicon.txt'}: {len(lexicon)} entries")

    bad = build_bad_words()
    assert 1500 <= len(bad) <= 1900, f"bad-words size {len(bad)} outside [1500, 1900]"
    write_list(out_dir / "bad_words.txt", "tokens that force a -1.0 override", bad)

    mid = build_level_list(MID_V, MID_N, MID_A)
    high = build_level_list(HIGH_V, HIGH_N, HIGH_A)
    write_list(out_dir / "middle_school_words.txt",
               "placeholder middle-school vocabulary (editable)", mid)
    write_list(out_dir / "high_school_words.txt",
               "placeholder high-school vocabulary (editable)", high)

    write_list(out_dir / "stopwords.txt",
               "pronouns, conjunctions, prepositions, articles, auxiliaries", STOPWORDS)
    write_list(out_dir / "abbreviations.txt",
               "tokens whose trailing period does not end a sentence", ABBREVIATIONS)

    irr_lines = ["# surface<TAB>lemma"]
    for surface in sorted(IRREGULARS):
        irr_lines.append(f"{surface}\t{IRREGULARS[surface]}")
    (out_dir / "irregular_lemmas.txt").write_text("\n".join(irr_lines) + "\n", encoding="utf-8")
    print(f"{out_dir / 'irregular_lemmas.txt'}: {len(IRREGULARS)} entries")

    dictionary = build_dictionary()
    write_list(out_dir / "base_dictionary.txt",
               "base forms guarding the suffix-stripping lemmatizer", dictionary)


if __name__ == "__main__":
    main()
