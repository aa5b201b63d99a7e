#!/usr/bin/env python3
"""Regenerate the bundled POS tag lexicon (word<TAB>tag, one entry per line).

Entries are generated from hand-curated seed vocabularies of common English
content words, expanded with regular inflections (plurals, verb forms) plus
a table of irregular verb forms and comparatives. Collisions resolve with
noun > adjective > verb > other, which biases tagging toward keyword-like
readings of ambiguous words ("book", "light", "watch").

Function words are deliberately absent: the tokenizer removes stopwords
before tagging, so they would never be looked up.
"""

from pathlib import Path

NOUNS = """
ability access accident account actor actress address administration adult
advantage adventure advert advertisement advertiser advertising advice
affair age agency agent agreement air airline airport album alarm alcohol
ambulance amount analysis analyst anchor angle animal answer apartment app
apple application appointment architect architecture area argument arm army
arrival art article artist aspect assessment asset assistant association
atmosphere attention attitude auction audience author authority auto
autumn average award baby back background bag baker bakery balance balcony
ball banana band bank banner bar bargain base basis basket bath bathroom
battery battle beach bean bear beauty bed bedroom beer beginning benefit
bicycle bike bill bird birth birthday bit block blog board boat body bonus
book booking border boss bottle bottom bowl box boy brand bread break
breakfast bridge broker brother browser budget builder building bus business
butter button buyer cab cabin cable cake calendar camera camp campaign
candidate capital captain car card care career cargo carpet cart case cash
castle cat catalog category cause ceiling cell center centre century chain
chair challenge championship chance change channel chapter character charge
charity chart cheese chef chemical chest chicken child chip chocolate choice
church cinema circle city claim class classroom click client climate clinic
clock cloth clothes cloud club coach coast coat code coffee coin college
color colour column combination comment commerce commission committee
community company comparison competition computer concept concert conclusion
condition conference connection consequence construction consultant contact
content contest context contract contrast control conversation cook cooker
copy corner corporation cost cotton council country countryside county couple
courage course court cousin cover cow credit crew crime crisis criterion
critic crowd cruise culture cup currency customer cycle dad damage dance
dancer danger data database date daughter day deal dealer death debate debt
decade decision deck decline decoration decrease deficit definition degree
delivery demand democracy density dentist department departure deposit depth
description design designer desk detail developer development device diamond
diet difference difficulty digit dinner direction director discount
discussion disease dish disk display distance distribution district document
dog dollar domain door dose download draft drama dream dress drink driver
drug duty ear earth east economy edge editor education effect efficiency
effort egg election electricity element elephant email emergency emotion
emphasis employee employer employment end enemy energy engine engineer
enquiry enterprise entrance entry environment episode equipment error essay
estate estimate euro evening event evidence exam example exchange excuse
exercise exhibition exit expansion experience expert explanation export
exposure expression extent eye face facility fact factor factory failure
faith family fan farm farmer fashion father fault feature fee feedback
feeling festival fiction field fig fight figure file film filter finance
finding finger fire firm fish fisherman fitness flag flat flavor flight
floor flower fly focus food foot football force forecast forest fork form
formula fortune forum foundation fox frame franchise freedom fridge friend
friendship front fruit fuel fun function fund furniture future gain gallery
game gap garage garden gas gate gear generation gift girl glass goal gold
golf good goods government grade grammar grant graph grass ground group
growth guarantee guard guest guide guitar gym habit hair half hall hand
handle harbor harm hat head headline health heart heat height hell helmet
hero hill hint history hobby hole holiday home homework honey hope horizon
horse hospital host hotel hour house household housing hub human humor hunt
hunter husband ice icon idea identity image impact import importance
impression improvement incident income increase index individual industry
inflation influence info information ingredient initiative injury inn
innovation input insect inside inspection inspector installation instance
instruction instrument insurance intention interest internet interview
introduction investment investor invitation invoice iron island issue item
jacket jam job joke journal journalist journey judge juice jump jungle
junior keyboard keyword kid king kingdom kitchen knee knife knowledge lab
label labor lack ladder lady lake lamp land landscape lane language laptop
launch law lawyer layer layout lead leader leadership leaf league leather
lecture leg lemon length lesson letter level library license lid life lift
light limit line link lion lip list listing literature litre load loan
location lock log logic logo look lord lorry loss lot love lunch luxury
machine magazine mail majority maker mall man management manager manner map
margin mark market marketing marriage master match material mathematics
matter meal meaning measure measurement meat mechanic media medicine medium
meeting member membership memory menu merchant message metal meter method
middle midnight milk mind mine minister minority minute mirror mission
mistake mix mixture mobile mode model moment money monitor monkey month
mood moon morning mortgage mother motion motor mountain mouse mouth move
movement movie mum muscle museum music musician name nation nature neck
need needle neighbor neighborhood nerve network news newspaper night noise
noon north nose note notice notion novelty number nurse nut object objective
obligation occasion offer office officer oil onion opening opera operation
operator opinion opportunity option orange order organization origin outcome
output oven owner ownership oxygen pace pack package packet page pain paint
painter painting pair palace pan panel paper parcel parent park parking
part participant partner partnership party passage passenger passion
password past pasta path patient pattern pause payment peace peak pen
pencil pension people pepper percentage performance period permission
person personality perspective pet phase phenomenon philosophy phone photo
photograph photographer phrase piano picture piece pig pilot pin pipe pitch
pizza place plan plane planet plant plastic plate platform player pleasure
plenty pocket poem poet poetry point police policy politician politics pool
population port portal portion position possession possibility post poster
pot potato pound poverty powder power practice presence present president
press pressure price pride priest principle print printer priority prison
prisoner privacy prize problem procedure process producer product
production profession professor profile profit program project promise
promotion proof property proportion proposal protection protein protest
province public publisher pull purchase purpose quality quantity quarter
queen query question queue rabbit race radio rail railway rain range rank
ranking rate ratio reaction reader reality reason receipt reception recipe
record recovery reduction reference reform refund region register
registrar registration regulation relation relationship release relief
religion rent repair reply report reporter republic reputation request
requirement research reservation resident resource respect response
responsibility rest restaurant result retailer return revenue review
revolution reward rice ride rider ring risk river road rock role roof room
root rope rose round route routine row rule runner safety sail sailor
salad salary sale salt sample sand sandwich satellite sauce saving scale
scene schedule scheme school science scientist score screen script sea
search season seat second secret secretary section sector security seed
selection self seller seminar senior sense sentence series server service
session set setting shadow shake shape share shareholder sheep sheet shelf
shell shelter ship shirt shock shoe shop shopping shore shoulder show
shower side sign signal signature silence silver singer sink sister site
situation size skill skin sky sleep slice slide slot smartphone smell smile
smoke snake snapshot snow soap soccer society sock software soil soldier
solution song sort soul sound soup source south space speaker speech speed
spirit sport spot spread spring square staff stage stair stake stamp stand
standard star start state statement station statistic status stay steak
steel step stick stock stomach stone storage store storm story stranger
strategy stream street strength stress stretch string structure student
studio study stuff style subject substance suburb success sugar suggestion
suit summary summer sun supermarket supplier supply support surface surgery
surprise survey suspect symbol symptom system table tablet tactic tail
talent talk tank target task taste tax taxi tea teacher team technique
technology teenager telephone television temperature template tenant
tendency tennis tent term test text texture theater theme theory therapy
thing threat throat ticket tide tie time tin tip tire tissue title tone
tongue tool tooth top topic total tour tourism tourist towel tower town toy
trade tradition traffic train trainer training transaction transfer
transition translation transport travel traveller treatment tree trend
trial trick trip trouble trousers truck trust truth tube tunnel turn
type uncle uniform union unit universe university update upgrade usage
user vacation valley value van variation variety vegetable vehicle venture
venue version victim victory video view viewer village visit visitor voice
volume vote wage waiter walk wall war warehouse warning watch water wave
way weakness wealth weapon weather web webpage website wedding week weekend
weight west wheel width wife wind window wine wing winner winter wire woman
wonderland wood wool word work worker workshop world worry wound writer
writing yard year youth zone zoo
""".split()

VERBS = """
accept achieve acquire act adapt add adjust admit adopt advertise advise
afford agree aim allocate announce annoy apologize appeal apply appoint
approach approve argue arrange arrive assess assign assist assume assure
attach attack attempt attend attract avoid bake base bear beat behave
belong bend bet bind bite blame blend bless block blow boil book boost
borrow bother bounce bow brake breathe breed brew browse brush bump burn
burst bury buy calculate call cancel capture care carry cast catch cater
celebrate charge chase chat cheat check cheer chew choose chop cite claim
clean clear climb cling close coach collapse collect combine command
commit communicate compare compete compile complain complete compose
compute conclude conduct confirm connect consider consist consult consume
contain continue contribute convert convince cook cope copy correct cost
count cover crash crawl create cross cry cut dance dare debate decide
declare decorate dedicate defeat defend define delay delete deliver demand
deny depend deposit describe deserve design destroy detect determine
develop devote dig direct disagree disappear discover discuss dislike
dismiss distribute dive divide donate double doubt download drag drain
draw dream dress drift drill drink drive drop dry earn eat edit educate
elect embrace emerge employ enable encourage engage enjoy ensure enter
entertain escape establish estimate evaluate examine exceed exchange
exclude excuse execute exist expand expect experience explain explore
export express extend face fail fasten favor fear feed feel fetch fight
fill film finance find finish fit fix flee float flood flow fold follow
forbid force forecast forget forgive format found freeze fry fulfil gain
gather generate give glance govern grab grant grill grind grow guarantee
guess guide handle hang happen harvest hate heal hear heat hesitate hide
hire hit hold hop hope host hug hunt hurry hurt identify ignore
illustrate imagine implement imply import impose impress improve include
increase indicate inform inject injure insert insist inspect inspire
install integrate intend interact interpret interrupt introduce invent
invest investigate invite involve iron join jump justify keep kick kill
kiss knit knock know lack land last laugh launch lay lead leak lean learn
leave lend lift link list listen live load locate lock log lose love
maintain make manage manufacture march mark market marry match matter
mean measure meet melt mention merge migrate mind miss mix modify monitor
motivate mount move multiply need negotiate nod notice obey object
observe obtain occupy occur open operate oppose order organize overcome
owe own pack paint park participate pass pause pay perform permit persuade
pick plan plant play plug point polish possess post pour practise praise
predict prefer prepare present preserve press pretend prevent print
proceed produce promise promote promptly propose protect prove provide
publish pull pump punish purchase pursue push qualify question queue quit
quote race rain raise rank rate reach react read realize receive recognize
recommend record recover reduce refer reflect refresh refuse register
regret relate relax release rely remain remember remind remove renew rent
repair repeat replace reply report represent request require rescue
research reserve resign resist resolve respect respond restore restrict
result retain retire return reveal review revise reward ride ring rise
risk roast rob roll rub run rush sail satisfy save say scan scare scatter
schedule score scratch scream search seek seem select sell send serve set
settle shake shape shift shine ship shoot shop shout show shrink shut sign
signal sing sink sit ski skip sleep slide slip smell smile smoke snap
solve sort sound speak specify spell spend spill spin split spoil sponsor
spread stand stare start state stay steal stick stir stop store stretch
strike struggle study submit succeed suffer suggest suit supply support
suppose surround survive swap swear sweep swim swing switch take talk
taste teach tear tell tend test thank think threaten throw tie tour trace
track trade train transfer transform translate transmit travel treat
trigger trust try turn type understand undertake unlock unveil update
upgrade upload urge use value vary verify visit vote wait wake walk want
warn wash waste watch wear weigh welcome win wish wonder work worry wrap
write yell yield
""".split()

ADJECTIVES = """
able absolute abstract academic acceptable accurate active actual
additional adequate administrative advanced affordable afraid aggressive
alive amazing ancient angry annual anxious apparent appropriate
attractive automatic available average aware awful awkward bad basic
beautiful big bitter blank blind blonde blue bold brave brief bright
brilliant broad broken brown busy calm capable careful careless certain
cheap chemical chief civil classic classical clean clear clever
clinical cold colorful comfortable commercial common compact competitive
complete complex comprehensive confident conscious considerable
consistent constant contemporary convenient cool corporate correct crazy
creative critical crucial cultural curious current cute daily dangerous
dark dead deaf dear deep delicious democratic dense dependent desperate
detailed different difficult digital direct dirty distant distinct
diverse domestic dominant double dramatic dry dual due dull dumb dynamic
eager early economic educational effective efficient elderly electric
electrical electronic elegant emotional empty enormous entire equal
essential ethnic everyday evident exact excellent exciting exclusive
expensive experimental explicit external extra extraordinary extreme
fair faithful famous fancy fast fat favorite federal final financial
fine firm fiscal fit flat flexible fond foreign formal fortunate forward
fragile free frequent fresh friendly frozen full fun funny future gentle
genuine giant glad global golden grand grateful great green grey gross
guilty handy happy hard harsh healthy heavy helpful hidden high
historic historical honest horizontal hot huge human humble hungry ideal
identical ill illegal immediate immense important impossible impressive
inclusive incredible independent individual industrial inevitable
informal inner innocent innovative intense interactive interesting
internal international intimate invisible irregular isolated joint
junior keen key kind large late latin lazy leading legal liberal light
likely limited liquid literary little live lively local logical lonely
long loose loud lovely low loyal lucky mad magic magnetic main major
male manual marine massive mature maximum mean mechanical medical medium
mental middle mild military minimal minimum minor mobile moderate modern
modest monthly moral multiple mutual mysterious narrow national native
natural nearby neat necessary negative nervous neutral new nice noble
noisy normal northern notable nuclear official okay online only open
operational opposite optimistic oral ordinary organic original other
outdoor outer overseas painful pale parallel particular passive past
patient peaceful perfect permanent personal physical pink plain pleasant
polite political poor popular portable positive possible powerful
practical precious precise pregnant premium prepared pretty previous
primary prime principal priority private productive professional
profitable prominent proper proud public pure purple qualified quick
quiet radical random rapid rare rational raw ready real realistic
reasonable recent red regional regular relative relevant reliable
religious remarkable remote renewable residential responsible retail
rich rigid risky robust romantic rough round royal rural sad safe salty
satisfied scarce scientific secondary secret secure senior sensible
sensitive separate serious severe sharp shiny short shy sick significant
silent silly similar simple single skilled slight slim slow small smart
smooth social soft solar solid sophisticated sound southern spare
special specific spicy spiritual stable standard steady steep sticky
still straight strange strategic strict strong structural stupid
subsequent substantial subtle successful sudden sufficient suitable
sunny super superb superior sure surprising sustainable sweet swift
tall technical temporary tender terrible theoretical thick thin tight
tiny tired top total tough toxic traditional tragic tremendous tropical
typical ugly ultimate unable unacceptable uncomfortable underlying
unemployed unexpected unfair unhappy unique universal unknown unlikely
unusual upset urban urgent useless usual vague valid valuable variable
vast verbal vertical viable vibrant violent virtual visible visual vital
vivid vocal voluntary vulnerable warm weak wealthy weekly weird western
wet white wide wild willing wise wooden wrong yellow young
""".split()

# Adverbs and interjections; tagged "other" so they never head an NP-chunk.
OTHERS = """
abroad absolutely accordingly actively actually afterwards ahead alike
altogether anyhow anymore apart apparently approximately arguably
automatically backward badly barely basically briefly broadly carefully
certainly cheaply chiefly clearly closely commonly completely consequently
considerably consistently constantly correctly currently daily deeply
definitely deliberately directly dramatically early easily effectively
efficiently entirely equally especially essentially eventually exactly
exclusively explicitly extremely fairly fast finally firmly firstly
forever formally formerly fortunately forward frankly freely frequently
fully furthermore generally gently genuinely gradually greatly happily
hardly heavily hello helpfully hence highly honestly hopefully however
hugely immediately increasingly incredibly indeed independently indoors
inevitably initially instantly instead intensely internationally jointly
largely lately latterly lightly likewise literally locally loudly mainly
markedly maybe meanwhile merely mildly moreover mostly namely naturally
nearby nearly neatly necessarily nevertheless newly nicely nonetheless
normally notably nowadays obviously occasionally oddly officially often
once online only openly originally otherwise outdoors outright overall
overnight overseas partially particularly partly perfectly perhaps
permanently personally physically plainly politely poorly possibly
precisely predominantly presently presumably previously primarily
privately probably promptly properly publicly purely quickly quietly
quite randomly rapidly rarely rather readily really recently regularly
relatively reluctantly remarkably repeatedly reportedly respectively
roughly routinely sadly safely secondly seemingly seldom separately
seriously sharply shortly significantly silently similarly simply
sincerely slightly slowly smoothly socially softly solely somewhat soon
specifically steadily still strictly strongly subsequently substantially
successfully suddenly sufficiently supposedly surely surprisingly
temporarily terribly thereafter thereby therefore thoroughly thus
tightly today together tomorrow tonight totally truly twice typically
ultimately unfortunately uniformly uniquely unnecessarily upstairs
upward urgently usually utterly vastly verbally virtually visibly
warmly weekly wholly widely willingly wisely yesterday
""".split()

# Irregular verb forms that the regular inflector cannot derive.
IRREGULAR_VERB_FORMS = """
ate bought began bent bet bit blew bound bore broke brought built burnt
came caught chose clung crept dealt did done drank drawn drew driven
drove dug fell felt flew forgot fought found froze gave gone got grew
heard held hid hit hung kept knew laid lay led left lent lost made meant
met paid put ran rang read ridden rode rose said sang sank sat saw sent
shone shook shot showed shown shrank slept slid sold sought sped spent
spoke spread sprang stood stole struck stuck sung swam swept swore swung
taught thought threw told took tore wore woke won wound wove written
wrote
""".split()

# Comparative/superlative forms kept as adjectives.
COMPARATIVES = """
angrier angriest bigger biggest brighter brightest broader broadest busier
busiest cheaper cheapest cleaner cleanest clearer clearest closer closest
colder coldest cooler coolest darker darkest deeper deepest dirtier
dirtiest drier driest earlier earliest easier easiest faster fastest
fatter fattest finer finest firmer firmest fresher freshest friendlier
friendliest fuller fullest gentler gentlest greater greatest greener
greenest happier happiest harder hardest healthier healthiest heavier
heaviest higher highest hotter hottest kinder kindest larger largest
later latest lazier laziest lighter lightest longer longest louder
loudest lower lowest luckier luckiest milder mildest narrower narrowest
nearer nearest newer newest nicer nicest noisier noisiest older oldest
paler palest poorer poorest prettier prettiest prouder proudest quicker
quickest quieter quietest richer richest rougher roughest rounder
roundest sadder saddest safer safest sharper sharpest shorter shortest
simpler simplest slower slowest smaller smallest smarter smartest
smoother smoothest softer softest sooner stranger strangest stronger
strongest sweeter sweetest taller tallest thicker thickest thinner
thinnest tighter tightest tougher toughest warmer warmest weaker weakest
wealthier wealthiest wetter wettest wider widest wilder wildest wiser
wisest worthier worthiest younger youngest
""".split()

NOUNS_EXTRA = """
abbey accessory accountant acid acre acrobat actuary addiction additive
admiral aerial aeroplane affiliate aftermath afternoon agenda aide
airfare airframe airship aisle alarm alert algebra algorithm alibi alley
alligator alloy almond alphabet altar altitude aluminium amateur
ambassador amber ambition amendment ammunition anatomy anchovy anecdote
angel anger ankle announcer annuity anorak ant antelope anthem antibiotic
antique anxiety apology apostrophe apparatus appendix appetite applause
appliance apprentice apricot apron aquarium arch archer archive arena
arithmetic ark armchair armour arrow arson artery arthritis artichoke
asparagus asphalt aspirin assassin assembly asthma astronaut astronomer
athlete atlas atom attic attorney aubergine audit auditor aunt aurora
avalanche avenue aviation avocado axe axis axle babysitter bachelor
bacon bacteria badge badger badminton bagel bagpipe bail bait ballad
ballet balloon ballot bamboo bandage bandit banjo banker bankruptcy
banquet baptism barber barcode barge baritone barley barn barometer
baron barrack barrel barrier bartender baseball basement basil bassoon
bat batch baton battalion battlefield bay bayonet bazaar beacon bead
beak beam beard beast beaver beetle beggar beginner behaviour belief
bell belly belt bench benchmark berry bible bibliography bidder billboard
billion bin binder biography biology birch biscuit bishop bison blade
blanket blast blaze blazer blister blizzard blossom blouse blueprint
boar boardroom bodyguard boiler bolt bomb bond bone bonfire bookcase
bookkeeper booklet bookmark bookstore boot booth borough bottleneck
boulder boulevard boundary bouquet boutique bowel bowler bracelet bracket
braid brain brake bran branch brass bravery breach breadth breakdown
breakthrough breast breath breeze brick bride bridegroom briefcase
brigade brim brine broccoli brochure bronze brooch brook broom broth
brow brush bubble bucket buckle bud buffalo buffet bug bulb bull bulldozer
bullet bulletin bumper bun bundle bungalow bunker burden bureau burger
burglar burial burrow bust butcher butterfly buttock cabbage cabinet
cactus cafe cafeteria cage calculator calf calorie camel camcorder
campus canal canary candle candy cane cannon canoe canopy canteen canvas
canyon cap cape capsule caption caravan carbon cardboard cardigan
caretaker carnation carnival carol carpenter carriage carrot cartoon
cartridge carving cashier casino casket cassette casserole cast catapult
caterpillar cathedral cattle cauliflower caution cavalry cave cavity
celery cellar cello cement cemetery censor census centimetre ceremony
certificate chalk chamber chameleon champagne champion chandelier chaos
chapel chariot charm charter chassis chauffeur checklist checkout
checkpoint cheek cheetah chemist chemistry cheque cherry chess chestnut
chick chill chimney chin chimpanzee chisel chord chore chorus christening
chrome chunk churn cider cigar cigarette circuit circulation circus
citizen citrus clam clamp clan clarinet clasp clause clay cleaner
clearance clergy clerk cliff climber clip cloak clone closet closure
clove clown clue cluster clutch coal coalition cobweb cockpit cockroach
cocktail cocoa coconut cod coffin cog coil colleague collar collision
colonel colony comb combat comedian comedy comet commander commentary
commentator commerce commodity commuter compass compensation competitor
complaint complexion component composer composition compost compound
compromise comrade concession concrete condo conductor cone confession
confetti confidence congestion congress conjunction conscience consensus
conservatory consonant conspiracy constable constitution consumption
continent contractor contribution convent convention convoy cookbook
cookie coordinator cop copper copyright coral cord cork corkscrew
cornerstone coroner corpse corridor corruption cosmetics costume cottage
cougar cough counsel counter countdown courier courtyard coverage
crab cradle craft craftsman crane crater crayon cream crease creature
creek cricket criminal crocodile crop crossing crossroads crossword
crow crown crumb crust crutch crystal cub cube cucumber cuff cupboard
curb cure curfew curl curriculum curry cursor curtain curve cushion
custard custody custom cutlery cyclist cylinder cymbal daffodil dagger
dairy daisy dam dashboard dawn deadline deadlock dealership debris
debut decay deed deer defect defence defender deficiency delegate
delegation delight demo demographic demolition demon den denim density
dentistry deodorant depot depression deputy descendant descent desert
dessert destination destiny detective detector detergent detour devil
dew diagnosis diagram dial dialect dialogue diameter diaper diary dice
dictator dictionary digestion dignity dilemma dime dimension dinghy
dinosaur diploma diplomat directory dirt disability disaster disc
discipline disclosure discourse discovery discretion disguise disgust
dispatcher dispute distress ditch dividend diver diversity divorce dock
doctrine dodge doll dolphin dome dominance donation donkey donor doom
dorm dosage dot dough doughnut dove drain drainage draught drawer
drawing dread dresser dressing drill drought drum drummer duck duckling
duel duet duke dumpling dune dungeon dusk dust duvet dwarf dye dynamics
dynasty eagle earthquake easel eater eclipse ecology ecosystem editorial
eel elbow elder electorate electrician electron elevator elite elm
eloquence embargo embassy ember emblem embroidery emerald emigrant
emission emperor empire employer enamel enclosure encore encyclopedia
endorsement endurance enforcement engagement engineering ensemble
enthusiasm envelope envy enzyme epidemic equation equator equity era
eruption escalator escort espresso essence eternity ethics etiquette
euphoria evaluation evacuation evolution exam examination excavation
excellence excerpt excess excursion execution executive exhaust
exhibit exile existence expedition expenditure expense experiment
expertise expiry explosion explosive exporter extension exterior
extinction extract eyebrow eyelash eyelid fabric facade fairway fairy
falcon fame famine fang fare farewell fascism fatigue faucet fauna
feast feather federation fence fencing fern ferry fertilizer fever
fibre fiddle filament fillet fin finale finalist fingerprint fir
firearm firefighter fireplace firework firmware fishery fist fixture
fjord flake flame flamingo flannel flare flask fleet flesh flint flip
flock flora florist flour flu fluid flute foam fog foil folder folk
folklore follower fondness forearm forehead foreigner foreman forgery
fork formation fort fortress fossil foster fountain fowl fraction
fracture fragment fragrance fraud freckle freezer freight frenzy
frequency fresco friction fringe frog frontier frost froth frown
fudge fugitive fumes funnel fur furnace fuse fuselage fusion gadget
gala galaxy gale gallon gallery gamble gambler gang gangster gap
garlic garment gasket gasoline gateway gauge gazette gel gem gene
general generator generosity genius genre gentleman geography geology
geometry germ gesture geyser ghost giant gig giggle gill ginger
giraffe girlfriend glacier gladiator gland glare glider glimpse globe
gloom glory glossary glove glue goat goddess goggles goldfish
goodwill goose gorilla gospel gossip gourmet gown grace grain gram
grammar grape grapefruit graphite gratitude grave gravel gravity
graze grease greed greenhouse grenade grid grief grill grip grocer
grocery groom groove grouse grove guardian guerrilla guilt gull gulf
gum gun gust gut gutter gymnast gypsy habitat hail hallway halt ham
hamburger hamlet hammer hammock hamster handbag handbook handful
handkerchief handler handshake hanger hangover harbour hardship
hardware hare harmony harness harp harvest hash hassle hatch hatchet
hatred hawk hay hazard haze hazel headache headlight headphone
headquarters heap heater heather hectare hedge hedgehog heel heir
helicopter helium hem hemisphere hen herb herd heritage hermit heron
herring hiccup hierarchy highway hijacker hiker hilltop hinge hip
hippopotamus hire historian hive hoax hockey hoe hog hoist holder
hollow holly homeland homepage homicide honesty honeymoon hood hoof
hook hooligan horizon hormone horn hornet horoscope horsepower hose
hospitality hostage hostel hostess hound hovercraft hull hum humidity
humility hummingbird hunch hurdle hurricane hut hutch hybrid hydrant
hydrogen hyena hygiene hymn hype hypothesis iceberg icing icicle
ideology idiom idiot idol igloo ignition illusion illustration
illustrator imagination imitation immigrant immigration immunity imp
implant implement implication importer imprisonment impulse incense
inch incidence incentive incision inclusion indicator indigestion
inertia infancy infant infantry infection inferno infinity influenza
informant infrastructure inhabitant inheritance injection injustice
ink inmate inquest inquiry inscription insight insignia insomnia
inspiration installment instinct institute institution instructor
insulation insulin insult intake integration integrity intellect
intelligence intensity intent interaction interface interference
interior intermission intersection interval intervention intestine
intruder intuition invasion inventory invertebrate investigation
investigator iris irony irrigation islander isolation isotope itinerary
ivory ivy jackal jackpot jade jaguar jail janitor jar jaw jazz jeans
jelly jellyfish jerk jersey jet jewel jeweller jewellery jigsaw jockey
jogger jogging joint joist joker jolt jug juggler junction jury
justice jute kangaroo karate kayak kebab keel keeper kennel kerb
kernel kettle kidney kilogram kilometre kilt kin kiosk kit kite kitten
kiwi knack knight knob knot knuckle koala ladle ladybird lagoon lair
lamb landfill landing landlady landlord landmark lantern lapse larder
lark larva laser latch lathe latitude laughter laundry lava lavatory
lavender lawsuit lawn lawnmower layman layoff lead leaflet leak leap
ledge ledger leek legacy legend legislation leisure lender lens lentil
leopard leotard leper lethargy lettuce levee lever liability liaison
liar liberty librarian lice lichen licorice lieutenant lifeboat
lifeguard lifestyle lifetime ligament lighthouse lighting lightning
lilac lily limb lime limestone limousine linen liner linguist lining
lino lintel lioness liquor litigation litter liver livestock lizard
llama lobby lobe lobster locker locomotive locust lodge lodger loft
logbook loneliness longitude lookout loom loop lotion lottery lotus
lounge louse lullaby lumber lump lunar lung lurch lure lust lute
luggage lyric macaroni machinery mackerel magician magistrate magnet
magnitude magpie mahogany maid mainframe mainland maintenance maize
majesty malaria mammal mammoth mandate mane mango manifesto mankind
manor mansion mantel manual manufacturer manure manuscript maple
marathon marble mare marina mariner marmalade marquee marrow marsh
marshal mascara mascot mask mason masterpiece mast mat matchbox mate
mattress mausoleum maze meadow mechanics mechanism medal medallion
mediator meditation melody melon membrane memo memoir memorandum
memorial menace mentor mercury mercy mermaid merger meringue merit
mesh metaphor meteor meteorite methane metropolis microbe microphone
microscope microwave midday midfield midst midwife might migraine
migrant migration mildew mile mileage milestone militia mill millennium
miller millimetre millionaire mimic mince mineral mingle miniature
minibus minimum miner mink mint miracle mirage mischief misery
misfortune missile missionary mist mite mitten moat mob mobility
moccasin mockery modem moderator modesty module moisture molar mole
molecule momentum monarch monastery monk monopoly monsoon monster
monument moor moose mop morale morgue mosaic mosque mosquito moss
motel moth motive motorcycle motorway motto mould mount mourning
moustache mouthful mucus mud muffin mug mule multitude mumps mural
murder murderer murmur mushroom musket mussel mustard mutiny mutton
myriad mystery myth nail nanny nap napkin narrative nationality
naturalist navel navigation navigator navy nebula necessity necklace
nectar needlework negligence negotiation nephew nest nettle neutron
niche nickel nickname niece nightingale nightmare nitrogen nobility
noble nod nomad nominee noodle nook noose norm nostril notebook
notification nougat nought noun nourishment novel novelist novice
nozzle nucleus nugget nuisance nun nursery nutmeg nutrition nylon
oak oar oasis oath oatmeal oats obesity obituary oblivion oboe
observer observatory obsession obstacle occupant occupation
occurrence octave octopus odour offence offender offspring ogre ohm
ointment olive omelette omen onlooker onset opal opener operative
opponent opposition oppression optician optimism orbit orchard
orchestra orchid ordeal ore organ organism orientation ornament
orphan orphanage ostrich otter ounce outbreak outburst outcast
outfit outing outlaw outlet outline outpost outrage outsider oval
ovation overcoat overdose overdraft overhaul overload overture owl
ox oxide oyster ozone pad paddle paddock padlock pagan pageant pail
palm pamphlet pancake panda pane panic panther pantry pants papaya
parachute parade paradise paradox paraffin paragraph parakeet
parasite paratrooper parchment pardon parish parliament parlour
parole parrot parsley parsnip participle particle partition
partridge pastime pastor pastry pasture patch patent patio patriot
patrol patron pavement pavilion paw pawn payroll pea peach peacock
peanut pear pearl peasant peat pebble pedal pedestrian pedigree peel
peer peg pelican pellet pelvis penalty pendant pendulum penguin
peninsula penny pensioner peony pepper perch percussion perfume
peril perimeter periscope perjury permit persecution perseverance
persimmon personnel perspiration pest pesticide petal petition
petrol petroleum pew pharmacist pharmacy pheasant phobia phoenix
phonetics phosphorus physician physicist physics physiology pianist
pickle picnic pier pigeon pigment pike pilgrim pilgrimage pill pillar
pillow pimple pincers pine pineapple pint pioneer pipeline piracy
pirate pistol piston pit pitcher pity pivot pixel placard plague
plaice plank plankton planner plaster plateau platinum platoon
platter playground playwright plaza plea plight plot plough plum
plumber plumbing plunge plural plutonium plywood pneumonia poacher
pod podium poison poker polar pole polio pollen pollution
polo polygon pomegranate pond pony poodle poplar poppy porcelain
porch porcupine pore pork porridge porter portfolio portrait
possum postage postcard postman posture potassium pottery pouch
poultry practitioner prairie prank prawn prayer preacher precaution
precedent precinct precision predator predecessor preface prefix
prejudice prelude premise premium preposition prescription
presentation preservation preservative prestige pretext prey
priesthood primrose prince princess principal printout prism
privilege probation probe procession procurement prodigy produce
profusion progress prohibition projection projector proliferation
prologue promenade pronoun pronunciation propaganda propeller
prophecy prophet proponent proprietor prose prosecution prosecutor
prospect prospectus prosperity protagonist protocol prototype
protractor proverb providence provision provocation prowess
proximity proxy prune psalm psychiatrist psychologist psychology
pub puberty puddle pudding puff pulley pulp pulpit pulse puma pump
pumpkin punch punctuation puncture pundit pupil puppet puppy
purity pursuit pus putty puzzle pyjamas pylon pyramid python quail
quarantine quarry quart quartz quay questionnaire quill quilt
quince quiver quiz quota quotation quotient raccoon racket radar
radiation radiator radish radius raffle raft rag rage raid rainbow
raincoat rainfall raisin rake rally ram ramp ranch rancher random
ransom rapids rapport rascal rash raspberry rat ration rattle
rattlesnake ravine razor realm reaper rebate rebel rebellion
recession recipient recital recognition recollection reconnaissance
recorder recreation recruit recruitment rectangle rector recurrence
redemption redundancy reed reef reel referee referendum refinery
reflection refuge refugee regime regiment registry rehearsal reign
rein reindeer relic remainder remark remedy reminder remnant remorse
removal renaissance rendezvous renewal renown repertoire repetition
replica repository reproduction reptile repute resemblance
resentment reservoir residence residue resignation resin resistance
resolution resort respite restoration restraint resume resurgence
retail retaliation retention retina retreat retrieval reunion
revelation revenge reversal revival rhetoric rhinoceros rhubarb
rhyme rhythm rib ribbon riddle ridge rifle rift rig rigging rim
rind riot ripple rite ritual rival rivalry rivet roadside roar
robber robbery robe robin robot rod rodent rodeo rogue roller
romance rook rooster rooftop rosemary roster rostrum rot rotation
rotor rouge roulette roundabout rover rowan royalty rubble ruby
rucksack rudder rug rugby ruin ruler rum rumour rump rung runway
rupture rust rustle rut rye sabotage sachet sack sacrifice saddle
saga sage sailing saint sake salamander salesman saliva salmon
salon saloon salvage salvation sanctuary sandal sandstone sanity
sap sapphire sardine satchel satin satire satisfaction saturation
saucepan saucer sauna sausage savage saviour saw sawdust saxophone
scaffold scaffolding scalp scandal scanner scar scarcity scarecrow
scarf scent sceptic schooner scissors scoop scooter scope scorn
scorpion scout scrap scrapbook scratch scree screwdriver scribe
script scroll scrutiny sculptor sculpture scum scythe seafood seagull
seal seam seaman seance seaside seaweed secrecy sect sediment seduction
seeker segment seizure selfishness semicircle semicolon seminar
senate senator sensation sentiment sentry sequel sequence sergeant
serpent serum servant settlement settler sewage sewer sewing sextant
shack shaft shale shame shampoo shamrock shark shawl shears shed
shepherd sheriff shield shin shingle shipment shipwreck shoal
shoemaker shortage shorthand shotgun shovel shrapnel shred shrew
shrine shrub shrug shutter shuttle sibling sickness sideboard sideline
siege sieve sigh sightseeing silhouette silicon silk sill silo
simplicity sin sinew siren sirloin skate skeleton sketch skewer
skier skin skipper skirmish skirt skull skunk slab slang slate
slaughter slave slavery sled sledge sledgehammer sleet sleeve sleigh
slipper slogan slope sloth slot slum slumber smash smith smog
smuggler snack snail snapshot snare sneeze sniper snorkel snout
snowflake sob socket sod sodium sofa softness sojourn solder
soldier solicitor solitude solo solvent sonata sonnet soot soprano
sorcerer sorrow souvenir sovereign sow spa spade spaghetti span
spaniel spanner spark sparkle sparrow spasm spatula spawn spear
specialist specialty specimen spectacle spectator spectrum speculation
sphere spice spider spike spinach spindle spine spiral spire spit
spite spleen splendour splinter spoke spokesman sponge spool spoon
spore spout sprain spray sprout spruce spur spy squad squadron
squash squid squirrel stab stability stable stack stadium stag
stagecoach stain staircase stake stalk stall stallion stamina
stampede stanza staple starch stardom starling statue stature
statute steam steamer steed steeple stem stencil stepmother steppe
stereo stern stew steward stewardess stigma stile stimulus sting
stint stipend stitch stoat stockade stocking stool stopwatch stork
stove stowaway strain strait strand strap straw strawberry streak
stride strife strip stripe stroke stroll stronghold strut stub
stubble stud stump stunt sturgeon subcommittee subdivision submarine
subscriber subscription subsidiary subsidy substitute subtitle
subtlety subway successor suction suede suffix sulphur sultan
summit summons sundial sunflower sunrise sunset sunshine superstition
supervision supervisor supplement surcharge surf surge surgeon
surname surplus surrender surveillance survivor suspension suspicion
swab swallow swamp swan swarm sweat sweater swine switchboard sword
swordfish sycamore syllable syllabus symmetry sympathy symphony
symposium syndicate syndrome synonym syntax syrup tab tabernacle
tack tackle tadpole taffeta tag tailor takeover talc tale talon
tambourine tan tangerine tangle tanker tap tapestry tar tarantula
tariff tarmac tarpaulin tart tassel tattoo tavern tax taxation
taxpayer teak teapot tear teaspoon technician teddy telegraph
telescope teller temper tempest temple tempo temptation tenant
tendon tenor tension tentacle tenure termite terrace terrain
terror territory testament testimony tether textbook textile
thatch thaw theft theologian theology therapist thermometer
thermostat thesaurus thesis thicket thief thigh thimble thorn
thoroughfare thread threshold thrift thrill throne throng throttle
thrush thrust thud thug thumb thunder thyme tiara tick tiger
tile till tilt timber timetable tin tinsel tint tipper toad
toadstool toast toaster tobacco toddler toe toffee toga toil
token toll tomato tomb tombstone tonic tonsil toolkit topography
torch tornado torpedo torrent torso tortoise torture tote totem
toucan touchdown tournament tow tractor trademark trader tragedy
trail trailer trait traitor tram trampoline trance tranquility
transcript transformation transformer transistor transit translator
transmission transmitter transplant trapdoor trapeze trauma tray
treason treasure treasurer treasury treaty treble trek trellis
tremor trench trespasser tress trestle tribe tribunal tributary
tribute trifle trigger trilogy trinity trinket trio triumph trolley
trombone troop trooper trophy tropic trout trowel truce trumpet
trunk tub tuba tuberculosis tug tuition tulip tumbler tumour tuna
tundra tune tunic turbine turbulence turf turkey turmoil turnip
turnover turnpike turnstile turret turtle tusk tutor tutorial
tweed tweezers twig twilight twine twinge twirl typhoon
typist tyranny tyrant udder ulcer ultimatum umbrella umpire
underdog undergrowth underwear unicorn unification unison
upbringing upheaval upholstery uprising uproar upkeep uranium
urchin urn usher utensil utility utterance vacancy vaccine vacuum
vagabond valve vandal vandalism vanguard vanilla vanity vapour
varnish vase vault veal vegetation veil vein velocity velvet
vendetta vendor veneer vengeance venison venom vent ventilation
veranda verb verdict verge vermin verse vessel vest vestibule
veteran veto viaduct vial vicar

vice vicinity victor view
vigil vigilante vigour villa villain vine vinegar vineyard vintage
vinyl viola violation violence violet violin violinist viper virus
visa viscount vision vista vitamin vocabulary vocalist vodka vogue
void volcano volley volleyball volt voltage volunteer vowel voyage
vulture wad wafer waffle wagon waist waistcoat wake walker walkway
wallet walnut walrus waltz wand wanderer ward warden wardrobe ware
warfare warhead warmth warp warrant warranty warrior wart wasp
wastage watchdog watchman watercolour waterfall waterfront watermelon
waterproof watt wax waybill wayfarer weasel weaver web webinar wedge
weed weekday weevil welder welfare well whale wharf wheat whereabouts
whim whip whirl whirlpool whirlwind whisk whisker whisky whisper
whistle whiteboard widow widower wilderness wildlife willow winch
windmill windscreen windshield windsurfing wink wisdom wish wisp
wizard wolf wombat wonder workbench workforce workload workman
worm worship worth wrath wreath wreck wreckage wren wrench wrestler
wrinkle wrist writ wrongdoing yacht yak yarn yawn yeast yolk yoga
yoghurt yonder zeal zebra zenith zephyr zero zest zigzag zinc zip
zipper zodiac zombie
""".split()

VERBS_EXTRA = """
abandon abolish absorb abuse accelerate accompany accomplish accumulate
accuse acknowledge activate administer admire aggregate alert align
allege alleviate amend amuse analyse analyze anticipate appreciate
arise articulate ascend aspire assemble assert assimilate astonish
attain attribute audit authorize automate await awaken ban bang bark
bash bathe batter beckon beg behold bid blink bloom bluff blur blush
boast bolster bombard boot bog bookmark braid brand breach broadcast
buckle bud budge buffer bulge bully bundle burrow bustle buzz calm
camp caption carve cascade categorize cease certify challenge channel
characterize chart cherish chill chirp chuckle churn circle circulate
clarify classify clench click clip cloak clog clutch coincide
collaborate collide colonize comfort commemorate commence commend
commit compel compensate complement complicate compliment comply
conceal concede conceive concentrate condemn condense configure
confess confide configure confine conform confront confuse congratulate
conquer conserve consolidate conspire constitute constrain construct
contemplate contend contract contradict converge converse convey
convict cool coordinate correlate correspond corrupt counsel
counteract crack cram cramp crave creak crumble crunch crush
cuddle curb curl curse customize dampen dangle dart dash daze dazzle
decay deceive decipher dedicate deduce deduct deem deepen defer defy
degrade dehydrate delegate deliberate delight demolish demonstrate
denote depress depict deplete deploy deprive derive descend designate
despise detach detain deteriorate devastate deviate devise devour
dictate differ differentiate diminish dip disable discard discharge
disclose disconnect discourage discriminate disguise disgust
disintegrate dislike dismantle dispatch dispense disperse displace
dispose disrupt dissolve distinguish distort distract disturb
diverge diversify divert dodge dominate dose dread drench dribble
drip drown dwell dwindle echo elaborate elevate eliminate elude
embark embed embody empower emulate enact enchant encode encompass
endanger endorse endure energize enforce engrave enhance enlarge
enlighten enlist enrich enroll enslave entail entice entitle
entrust envision equip eradicate erase erect erode erupt escalate
evaporate evoke evolve exaggerate excel excite exclaim exemplify
exert exhale exhibit expel expire explode exploit expose extinguish
extrapolate fabricate facilitate fade falter familiarize fascinate
fathom feast ferment fiddle fidget finalize flap flare flatten
flatter flaunt flick flicker fling flip flirt flock flourish
fluctuate flunk flush flutter foam fondle forge formalize formulate
fortify fracture fragment frighten frolic frown fumble fund fuse
gallop gasp gaze generalize germinate giggle glance glare gleam
glide glimmer glisten glitter gloat glorify glow gnaw gossip gouge
grapple grasp graze grieve grin grip groan groom grope growl grumble
grunt gulp gurgle gush halt hamper harass harden harmonize hasten
haul haunt heave hedge herald hinder hoard hobble hoist honk honour
hoot hover howl huddle humiliate hush hustle hypothesize idolize
ignite immerse immunize impair impart impede imperil implant
implicate implore incline incorporate incur indulge infect infer
infest infiltrate inflate inflict infringe infuriate inhabit inhale
inherit inhibit initiate innovate inquire inscribe instigate instill
institute instruct insulate intercept interfere interrogate
intersect intervene intimidate intrigue inundate invade invoke
irrigate irritate isolate jab jam jeopardize jerk jingle jog jostle
jot juggle jumble kneel knit lag lament languish lash lather lavish
leap lecture legislate legitimize lessen levy liberate lick limp
linger liquidate litigate litter loath lodge loom loot lounge lull
lumber lurk magnify mandate maneuver manipulate marvel mash
masquerade materialize maximize meddle mediate meditate mend
mentor mimic minimize misinterpret mislead mobilize mock modernize
mould mourn mow mumble munch murmur mutate mutter mystify nag
narrate navigate neglect nestle neutralize nibble nominate notify
nourish nudge nurture obscure obsess obstruct offend offset ooze
optimize orbit orchestrate oscillate oust outlaw outline outrage
outsource overlap overhaul overlook override oversee overturn
overwhelm pamper paralyze paraphrase pardon parse patrol pave
peck pedal peek peel peep penetrate perceive perch perish permeate
perpetuate persist personalize pertain pester petition pinch
pinpoint pivot placate plead pledge plough pluck plummet plunder
poach poise polarize ponder populate portray pose pounce pound
preach precede preclude predominate prescribe presume prevail
probe proclaim procure prod profess prohibit proliferate prolong
propel prosecute prosper provoke prowl pry publicize puff
pulverize punctuate purify quack quadruple qualify quantify quarrel
quench quiver rally ramble ransack rap rattle ravage readjust
reassure rebound rebuild rebuke recede reckon reclaim recline
reconcile reconsider reconstruct recount rectify recur recycle
redeem redirect rediscover redouble reel refine reinforce reinstate
reiterate rejoice rejuvenate rekindle relay relinquish relish
remodel renounce renovate repay repel replenish replicate reproduce
repudiate resemble resent reside resonate restrain resume resurrect
retaliate retract retrieve revamp revere revert revitalize revolt
revolve rip ripen ripple rot rotate rumble rustle sabotage salvage
sanction saturate savour scald scamper scavenge scold scoop scorch
scour scramble scrape scribble scrub sculpt scurry seal seduce
seep seize sever shatter shed shepherd shimmer shiver shove shovel
shred shriek shrug shuffle shun sift signify simmer simplify simulate
sip sizzle skim skid slam slash slay slump smash smear smuggle snarl
snatch sneak sniff snip snore snooze snuggle soak soar sob soothe
specialize speculate spearhead spiral splash splatter sprinkle sprint
sprout spurn squat squeak squeal squeeze squint stabilize stagger
stagnate stalk standardize startle starve stash steer stem stifle
stimulate sting stipulate stoop strangle stray streamline strive
stroll stumble stun subdue submerge subside subsidize substantiate
substitute subtract succumb summon supplement suppress surge surpass
surrender swirl synchronize synthesize tackle tamper tangle taper
tarnish taunt teem tempt terminate terrify testify thrash thrive
throb thwart tickle tiptoe tolerate topple toss trample transcend
transcribe traverse tread trample trespass trickle trim triple
triumph trudge tuck tumble tweak twist twitch undergo underestimate
undermine underpin underscore unfold unify unleash unravel unsettle
untangle uphold uproot usher utilize utter validate vanish
vanquish venture vex vibrate vindicate violate visualize vow wade
wag wager wail wander wane waver weave weep whack whine whirl
wiggle wilt wince withdraw wither withstand witness wobble worsen
wriggle yearn zoom
""".split()

ADJECTIVES_EXTRA = """
abrupt absent absurd abundant adamant adept adjacent adverse
affluent agile ajar alarming alert alleged aloof ample ancient
animated anonymous apt arbitrary arid arrogant astute audacious
austere authentic avid barren bashful beloved benevolent bizarre
bland bleak blissful blunt blurred boisterous bogus bulky bumpy
buoyant burly candid cardinal casual cautious celestial charming
chilly chronic chubby chunky clumsy coarse coherent colossal
colloquial compassionate compatible competent compulsory concise
condensed confidential congenial congested conspicuous content
cordial courteous covert cozy cramped crisp crooked crude cryptic
cumbersome cunning curly cursory customary cynical dazzling decent
defiant deft delicate delirious depressed derelict devious devout
diligent dim diminutive dingy dire discreet dismal disposable
distinctive docile dormant drastic dreary drowsy dubious dusty
eccentric edible eerie elaborate elastic elated eligible eloquent
elusive eminent emphatic endless enticing envious epic equitable
erratic esteemed eternal ethical euphoric exempt exotic expansive
expedient exquisite extensive exuberant faint feasible feeble
ferocious fertile fervent fickle fierce fiery filthy flawless
fleeting flimsy fluent fluffy foggy foolish forlorn formidable
frail frantic frigid frivolous frugal furious futile fuzzy gaudy
generic generous gigantic glamorous gleaming glossy gloomy gracious
grave greasy grim grimy grotesque grubby grueling gruesome gullible
handsome haphazard hasty hazardous hazy hearty hectic heinous
hilarious hollow hostile humid icy idle idyllic illicit illustrious
imminent immaculate immortal impeccable imperative impartial
implicit imposing impromptu imprudent impulsive inadequate incessant
incoherent inconsistent indifferent indigenous indignant
industrious inept inert infamous infinite ingenious inherent
inquisitive insane insatiable intact intricate intrepid invalid
irate jolly jovial jubilant juvenile lanky lavish lethal limp
listless literate lofty lucid ludicrous lukewarm luminous lush
lustrous luscious majestic malicious mandatory meager meek
melancholy mellow memorable menacing merciful metallic meticulous
mighty miniature minuscule miserable misty momentous monotonous
muddy mundane murky mute mysterious nimble nocturnal nominal
nostalgic notorious novel noxious numb nutritious obedient oblique
oblivious obscure obsolete obstinate odd ominous opaque opulent
ornate orthodox outrageous overt pallid paltry paramount parched
peculiar pending pensive perilous perpetual perplexed pervasive
petite petty pious pivotal placid plausible pliable plump poignant
pompous porous posh potent pragmatic precarious predominant
preliminary premature preposterous prestigious pristine profound
prolific prompt prone prudent punctual pungent quaint queasy
radiant ragged rampant rancid rash ravenous reckless redundant
refined relentless reluctant reminiscent remorseful renowned
repetitive resilient resolute respectable rigorous ripe robust
rosy rotten rowdy rugged rusty sacred savage scant scarlet scenic
sceptical scrawny scruffy seamless secluded sedate serene shabby
shallow sheer shrewd shrill silky sincere sinister skeptical
slack slender sluggish sly snug soggy solemn somber sparse
spacious spontaneous sporadic spotless staggering stale stark
staunch stealthy stern stiff stingy stout stormy stranded striking
stringent sturdy suave sublime subordinate subtle succinct succulent
sullen sultry supple supreme surly surreal swollen tactful tame
tangible tardy tart tedious tenacious tentative tepid thorough
thrifty tidy timid torrid tranquil transparent treacherous
tremulous trivial turbulent ubiquitous unanimous uncanny unduly
uneven unkempt unruly unscathed upbeat utter vacant vain vehement
verdant versatile vigilant vigorous vile vindictive vintage
vivacious void voracious wary watery weary whimsical wholesome
wicked witty woeful worthy wretched zealous
""".split()

VOWELS = set("aeiou")


def pluralize(noun: str) -> str:
    if noun.endswith(("s", "x", "z", "ch", "sh")):
        return noun + "es"
    if noun.endswith("y") and len(noun) > 1 and noun[-2] not in VOWELS:
        return noun[:-1] + "ies"
    if noun.endswith("fe"):
        return noun[:-2] + "ves"
    return noun + "s"


def _doubles_final(verb: str) -> bool:
    # short CVC stems double the final consonant (stop -> stopping)
    if len(verb) < 3 or len(verb) > 4:
        return False
    a, b, c = verb[-3], verb[-2], verb[-1]
    return a not in VOWELS and b in VOWELS and c not in VOWELS and c not in "wxy"


def adverb_of(adj: str) -> str:
    if adj.endswith("ic"):
        return adj + "ally"
    if adj.endswith("le") and len(adj) > 2 and adj[-3] not in VOWELS:
        return adj[:-1] + "y"
    if adj.endswith("y") and len(adj) > 1 and adj[-2] not in VOWELS:
        return adj[:-1] + "ily"
    if adj.endswith("ll"):
        return adj + "y"
    return adj + "ly"


def verb_forms(verb: str) -> list[str]:
    forms = [verb, pluralize(verb)]
    if verb.endswith("e") and not verb.endswith(("ee", "ye", "oe")):
        forms.append(verb[:-1] + "ing")
        forms.append(verb + "d")
    elif verb.endswith("y") and len(verb) > 1 and verb[-2] not in VOWELS:
        forms.append(verb + "ing")
        forms.append(verb[:-1] + "ied")
    elif _doubles_final(verb):
        forms.append(verb + verb[-1] + "ing")
        forms.append(verb + verb[-1] + "ed")
    else:
        forms.append(verb + "ing")
        forms.append(verb + "ed")
    return forms


def main() -> None:
    lexicon: dict[str, str] = {}

    def put(word: str, tag: str) -> None:
        word = word.strip().lower()
        if not word or not word.isalpha() or not word.isascii():
            return
        # noun > adjective > verb > other on collision
        rank = {"noun": 0, "adjective": 1, "verb": 2, "other": 3}
        if word not in lexicon or rank[tag] < rank[lexicon[word]]:
            lexicon[word] = tag

    for word in OTHERS:
        put(word, "other")
    for adj in ADJECTIVES:
        # sentence-initial "Cheaply ..." must not fall to the capitalized->noun rule
        put(adverb_of(adj), "other")
    for verb in VERBS + VERBS_EXTRA:
        put(verb, "verb")
    for form in IRREGULAR_VERB_FORMS:
        put(form, "verb")
    for adj in ADJECTIVES + ADJECTIVES_EXTRA:
        put(adj, "adjective")
    for adj in COMPARATIVES:
        put(adj, "adjective")
    for noun in NOUNS + NOUNS_EXTRA:
        put(noun, "noun")
        put(pluralize(noun), "noun")

    out = Path(__file__).resolve().parents[1] / "src" / "parkbandit" / "data" / "tag_lexicon.txt"
    lines = [f"{word}\t{tag}" for word, tag in sorted(lexicon.items())]
    out.write_text("\n".join(lines) + "\n", encoding="utf-8")
    print(f"wrote {len(lines)} lexicon entries to {out}")


if __name__ == "__main__":
    main()
