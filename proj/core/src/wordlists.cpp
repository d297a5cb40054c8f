#include "fragsat/errors.hpp"
#include "fragsat/vocab.hpp"

// Built-in word lists, byte-identical to data/common.vocab and
// data/fantasy.vocab (a test keeps them in sync). Two lists so train/eval
// corpora can draw from fully unrelated lexicons.

namespace fragsat {

namespace {

const char *kCommonVocabText = R"(# occupations and everyday categories
[nouns]
artist
beekeeper
carpenter
dentist
hunter
spy
actor
baker
banker
barber
biologist
blacksmith
brewer
builder
butcher
captain
cashier
chemist
clerk
coach
composer
cook
dancer
detective
doctor
driver
editor
engineer
farmer
fisherman
florist
gardener
geologist
goldsmith
guard
guitarist
historian
janitor
jeweler
journalist
judge
juggler
lawyer
lecturer
librarian
locksmith
magician
mason
mechanic
merchant
miner
musician
novelist
nurse
painter
pharmacist
philosopher
photographer
pianist
pilot
plumber
poet
politician
porter
potter
preacher
printer
professor
ranger
sailor
scholar
sculptor
shepherd
singer
soldier
surgeon
tailor
teacher
translator
waiter
weaver
welder
zoologist
[verbs]
chases/chase
admires/admire
bewitches/bewitch
hates/hate
amuses/amuse
avoids/avoid
blames/blame
defends/defend
despises/despise
distrusts/distrust
envies/envy
fears/fear
follows/follow
greets/greet
helps/help
imitates/imitate
)";

const char *kFantasyVocabText = R"(# creatures and archetypes
[nouns]
dragon
wizard
goblin
elf
dwarf
troll
knight
vampire
werewolf
unicorn
griffin
phoenix
centaur
mermaid
giant
ogre
pixie
sprite
wraith
ghoul
zombie
ghost
demon
angel
sorcerer
necromancer
alchemist
druid
bard
paladin
rogue
monk
archer
assassin
berserker
champion
conjurer
crusader
duelist
enchanter
exorcist
falconer
gladiator
healer
herald
hermit
illusionist
inquisitor
jester
keeper
minstrel
mystic
nomad
oracle
outlaw
pilgrim
prophet
guardian
reaper
rider
sage
scout
seer
shaman
summoner
templar
thief
trickster
vagabond
valkyrie
warden
warlock
warrior
watchman
wanderer
witch
banshee
gargoyle
imp
kraken
golem
[verbs]
enchants/enchant
haunts/haunt
curses/curse
banishes/banish
summons/summon
battles/battle
protects/protect
pursues/pursue
rescues/rescue
scares/scare
serves/serve
shadows/shadow
slays/slay
spares/spare
taunts/taunt
worships/worship
)";

} // namespace

const Vocabulary &default_vocabulary() { return builtin_vocabulary("common"); }

const Vocabulary &builtin_vocabulary(std::string_view name) {
	static const Vocabulary common = load_vocabulary(kCommonVocabText);
	static const Vocabulary fantasy = load_vocabulary(kFantasyVocabText);
	if (name == "common")
		return common;
	if (name == "fantasy")
		return fantasy;
	throw UnknownWord("no built-in vocabulary named '" + std::string(name) + "'");
}

} // namespace fragsat
