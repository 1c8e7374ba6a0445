#!/usr/bin/env python3
"""Regenerates the miniature resources under data/.

Writes a WordNet-format noun lexicon with real byte offsets, word counts,
stopwords, a small document corpus, a relation dump and the scenario inputs.
Gold files are produced separately by tools/gold.py.
"""

import json
import os
import sys

ROOT = os.path.join(os.path.dirname(os.path.abspath(__file__)), "..", "data")

# key | lemmas | gloss; indentation gives the hypernym.
TAXONOMY = """
entity | entity | that which is perceived or known or inferred to have its own distinct existence
  physical_entity | physical_entity | an entity that has physical existence
    object | object,physical_object | a tangible and visible entity that can cast a shadow
      whole | whole,unit | an assemblage of parts that is regarded as a single entity
        artifact | artifact,artefact | a man-made object taken as a whole
          instrumentality | instrumentality,instrumentation | an artifact that is instrumental in accomplishing some end
            implement | implement | instrumentation used in the performance of a task
              utensil | utensil | an implement for practical use especially in a household
                kitchen_utensil | kitchen_utensil | a utensil used in preparing food
                  cooking_utensil | cooking_utensil,cookware | a kitchen utensil made of material that does not melt easily and is used for cooking
                    pan.cook | pan,cooking_pan | cooking utensil consisting of a wide metal vessel
                      frying_pan | frying_pan,frypan,skillet | a pan used for frying foods
                      saucepan | saucepan | a deep pan with a handle used for stewing or boiling
                    pot.cook | pot | metal or earthenware cooking vessel that is usually round and deep and often has a handle and lid
                  spatula | spatula | a turner with a narrow flexible blade
                tableware | tableware | articles for use at the table
                  cutlery | cutlery,eating_utensil | implements for cutting and eating food
                    spoon.cutlery | spoon | a piece of cutlery with a shallow bowl and a handle used to stir or serve or eat food
                    fork | fork | cutlery used for serving and eating food
                  crockery | crockery,dishware | tableware made of fired clay
                    dish | dish | a piece of dishware used as a container for holding or serving food
                      plate.dish | plate | a flat dish on which food is served or from which food is eaten
                    cup.crockery | cup | a small open container usually with a handle used for drinking
              tool | tool | an implement used in the practice of a vocation
                cutter | cutter,cutting_implement | a cutting implement or tool for cutting
                  edge_tool | edge_tool | any cutting tool with a sharp cutting edge
                    knife.tool | knife | edge tool used as a cutting instrument with a pointed blade with a sharp edge and a handle
                    scissors | scissors,pair_of_scissors | an edge tool having two crossed pivoting blades
              cleaning_implement | cleaning_implement,cleaning_device,cleaning_equipment | an implement used to clean floors and surfaces
                broom | broom,besom | a cleaning implement for sweeping made of bristles or twigs attached to a long handle
                mop.clean | mop,swab | cleaning implement consisting of absorbent material fastened to a handle for cleaning floors
                brush.tool | brush | an implement that has bristles firmly set into a handle used for scrubbing or sweeping
                duster | duster | a cloth or feather implement used for dusting furniture
                dustpan | dustpan | a short-handled receptacle into which dust can be swept
                sponge.clean | sponge | a porous absorbent pad used for washing and wiping surfaces
            device | device | an instrumentality invented for a particular purpose
              appliance | appliance | a device or control that is very useful for a particular job
                home_appliance | home_appliance,household_appliance | an appliance that does a particular job in the home
                  kitchen_appliance | kitchen_appliance | a home appliance used in preparing food
                    stove | stove,kitchen_stove,range,cooker | a kitchen appliance used for cooking food
                    oven | oven | a kitchen appliance used for baking or roasting
                    refrigerator | refrigerator,fridge,icebox | a kitchen appliance that keeps food and drink cold
                    microwave | microwave,microwave_oven | kitchen appliance that cooks food by passing an electromagnetic wave through it
                    dishwasher | dishwasher,dishwashing_machine | a machine for washing dishes
                  washer.machine | washer,automatic_washer,washing_machine | a home appliance for washing clothes and linens automatically
                  dryer.machine | dryer,drier,clothes_dryer | an appliance that removes moisture from clothes by tumbling them in heated air
                  iron.appliance | iron,smoothing_iron | home appliance with a flat metal base that is heated and used to press and smooth cloth
                  vacuum.appliance | vacuum,vacuum_cleaner,hoover | an electrical home appliance that cleans carpets and floors by suction
              seal | seal,gasket | a device incorporating a fitted piece that prevents leakage
                washer.ring | washer | a flat ring of metal or rubber placed under a nut or bolt to seal a joint or reduce friction
              fastener | fastener,fastening | a device used to fasten things together
                bolt | bolt | a screw that screws into a nut to form a fastener
              printer | printer,printing_machine | a machine that prints text or pictures on paper
            weaponry | weaponry,arms,munition | weapons considered collectively
              weapon | weapon,arm | any instrument used in fighting or hunting
                knife.weapon | knife | a weapon with a handle and a blade with a sharp point
            equipment | equipment | an instrumentality needed for an undertaking
              sports_equipment | sports_equipment | equipment needed to participate in a particular sport
                golf_club | golf_club | golf equipment used by a golfer to hit a golf ball
                  spoon.golf | spoon | a golf club with a wooden head and a short shaft
                basket.hoop | basket,basketball_hoop,hoop | a horizontal circular metal hoop supporting a net through which players throw the basketball
            container | container | any object that can be used to hold things
              vessel | vessel | an object used as a container especially for liquids
                bowl.vessel | bowl | a round vessel that is open at the top used chiefly for holding food or liquids
                bucket | bucket,pail | a roughly cylindrical vessel that is open at the top and has a handle
                pan.container | pan | a shallow container made of metal
                flowerpot | flowerpot | a container in which plants are cultivated
              basket.container | basket,handbasket | a container that is usually woven and has handles
                hamper | hamper,clothes_hamper | a basket with a lid used to hold dirty clothes
              drawer | drawer | a boxlike storage compartment that slides in and out of a piece of furniture
              box | box | a rigid container with a flat base and sides
              trash.can | trash,trash_can,garbage_can,wastebasket | a bin that holds rubbish until it is collected
            furniture | furniture,piece_of_furniture | furnishings that make a room ready for occupancy
              cupboard | cupboard | a cabinet or recess with shelves and doors used for storing dishes and food
              cabinet | cabinet | a piece of furniture with doors and shelves and drawers
              dresser | dresser,chest_of_drawers,bureau | furniture with drawers for keeping clothes
              table.furniture | table | a piece of furniture having a smooth flat top supported by legs
              counter.top | counter,countertop | a flat horizontal surface in a kitchen where food is prepared
              shelf | shelf | a support that consists of a horizontal surface for holding objects
              bed | bed | a piece of furniture that provides a place to sleep
            sink | sink | a basin with a water faucet for washing hands or dishes or vegetables
          structure | structure,construction | a thing constructed from many parts
            building | building,edifice | a structure that has a roof and walls
              house | house | a dwelling that serves as living quarters for one or more families
              store.shop | store,shop | a mercantile establishment for the retail sale of goods or services
              supermarket | supermarket,grocery_store | a large self-service grocery store selling food and household goods
              restaurant | restaurant,eating_house | a building where people go to buy and eat meals
              refinery | refinery | an industrial plant for purifying a crude substance such as petroleum
              garage | garage | an outbuilding or part of a house where a car is kept
            stadium | stadium,arena | a large structure for open-air sports with tiers of seats for spectators
              bowl.stadium | bowl | a large bowl-shaped structure for open-air sports or entertainments
            room | room | an area within a building enclosed by walls and a floor and a ceiling
              kitchen | kitchen | a room equipped for preparing and cooking meals
              pantry | pantry,larder | a small storeroom for storing food and dishes
              bathroom | bathroom,bath | a room with a toilet and a sink and a bathtub or shower
              bedroom | bedroom,sleeping_room | a room used primarily for sleeping
              laundry_room | laundry_room,laundry,utility_room | a room equipped for washing and drying clothes and linens
              basement | basement,cellar | the lowest floor of a building partly or wholly below ground
              closet | closet,wardrobe | a small room or cabinet used for storing clothes and supplies
            court | court,basketball_court | a specially marked area within which a game such as basketball is played
            nest | nest | a structure in which birds lay eggs and raise their young
          covering | covering | an artifact that covers something else
            clothing | clothing,clothes,apparel | a covering designed to be worn on a person's body
              hosiery | hosiery,hose | socks and stockings and tights collectively
                sock | sock | hosiery consisting of a cloth covering for the foot worn inside the shoe
              shirt | shirt | a garment worn on the upper half of the body usually with sleeves and a collar
              sweater | sweater,jumper,pullover | a knitted garment covering the upper part of the body
              trousers | trousers,pants | a garment extending from the waist to the ankle and covering each leg separately
                jeans | jeans,blue_jeans,denims | close-fitting trousers of heavy blue denim for casual wear
            bedclothes | bedclothes,bed_clothing,bedding | coverings that are used on a bed
              sheet.bed | sheet,bed_sheet | bed linen made of a large rectangle of cotton or linen cloth
              blanket | blanket,cover | bedding made of thick warm cloth that keeps a person warm in bed
          piece_of_cloth | piece_of_cloth,piece_of_material | a separate part consisting of fabric
            towel | towel | a rectangular piece of absorbent cloth for drying or wiping
              paper_towel | paper_towel | a disposable towel made of absorbent paper
            rag | rag,dust_rag | a small piece of old cloth used for cleaning and dusting
          hanger.frame | hanger,coat_hanger,clothes_hanger | a frame of wood or metal or plastic with a hook at the top used for hanging up clothes
          paper_product | paper_product | a product made of paper
            sheet.paper | sheet,sheet_of_paper,piece_of_paper | a flat piece of paper used for writing or printing
          base | base,bag | a place in baseball that the runner must touch before scoring
            plate.home | plate,home_plate,home_base | the base where the batter stands in baseball
          trophy | trophy,prize | an award such as a silver cup given for success in a contest
            cup.trophy | cup,loving_cup | a large metal vessel with two handles awarded as a trophy to the winner of a competition
      location | location | a point or extent in space
        region | region | the extended spatial location of something
          vacuum.region | vacuum,vacuity | a region of space that is empty of matter
          space | space,outer_space | any location outside the earth's atmosphere
          forest | forest,woods,woodland | the trees and other plants in a large densely wooded area
          brush.shrubland | brush,brushwood,thicket | a dense growth of bushes
          garden | garden | a plot of ground where plants are cultivated
          farm | farm | a workplace consisting of farm buildings and cultivated land
          ocean | ocean,sea | a large body of salt water
          arcadia | arcadia | a mountainous region of ancient greece where shepherds tended flocks
          diamond.field | diamond,baseball_diamond,infield | the area of a baseball field enclosed by the three bases and home plate
    matter | matter | that which has mass and occupies space
      substance | substance | the real physical matter of which a thing consists
        compound | compound,chemical_compound | a substance formed by chemical union of two or more elements
          cleansing_agent | cleansing_agent,cleanser,cleaner | a preparation used in cleaning something
            detergent | detergent | a cleansing agent that differs from soap but also emulsifies oils and holds dirt in suspension
            soap | soap | a cleansing agent made from the salts of vegetable or animal fats
            bleach.agent | bleach,bleaching_agent,whitener | a chemical agent that makes things white or colorless
          ionic_compound | ionic_compound | a compound held together by electrostatic attraction between ions
            salt.chem | salt | a compound formed by replacing hydrogen in an acid by a metal
        element | element,chemical_element | any of the known substances that cannot be separated into simpler substances
          metallic_element | metallic_element,metal | any of several chemical elements that are usually shiny solids
            iron.metal | iron,fe | a heavy ductile magnetic metallic element that readily rusts in moist air
        material | material,stuff | the tangible substance that goes into the makeup of a physical object
          fabric | fabric,cloth,textile | artifact made by weaving or knitting natural or synthetic fibers
          paper | paper | a material made of cellulose pulp derived mainly from wood or rags
          lint | lint,fluff | fine ravellings of cotton or linen fibers
          trash.rubbish | trash,rubbish,garbage | worthless material that is to be disposed of
          dust.material | dust | fine powdery material such as dry earth
        fuel | fuel | a substance that can be consumed to produce energy
          fossil_fuel | fossil_fuel | fuel formed in the earth from plant or animal remains
            petroleum | petroleum,crude_oil,oil | a dark oil consisting mainly of hydrocarbons
        blood | blood | the fluid that is pumped through the body by the heart
        drug | drug | a substance used as a medicine or narcotic
          controlled_substance | controlled_substance | a drug whose possession and use is regulated by law
            pot.drug | pot,grass,marijuana | street names for marijuana
        water | water | a clear colorless liquid essential for life
        ingredient | ingredient,fixings | food that is a component of a mixture in cooking
          flavorer | flavorer,flavourer,flavoring,seasoner,seasoning | something added to food primarily for the flavor it imparts
            garlic | garlic,ail | aromatic bulb used as seasoning
            salt.food | salt,table_salt,common_salt | white crystalline sodium chloride used to season and preserve food
            pepper.spice | pepper,peppercorn | pungent seasoning from the berry of the common pepper plant used whole or ground
          onion.food | onion | the bulb of an onion plant eaten raw or cooked
          flour | flour | fine powdery foodstuff obtained by grinding and sifting the meal of a cereal grain
          egg.food | egg,eggs | oval reproductive body of a fowl such as a hen used as food
          butter | butter | an edible emulsion of fat made by churning milk or cream for cooking and table use
          oil.cooking | oil,cooking_oil,vegetable_oil | a fatty liquid from plants used in cooking and frying
    living_thing | living_thing,animate_thing | a living entity
      organism | organism,being | a living thing that can act or function independently
        animal | animal,beast,fauna | a living organism characterized by voluntary movement
          invertebrate | invertebrate | any animal lacking a backbone
            sponge.animal | sponge,poriferan | a primitive marine animal whose porous body is supported by a fibrous skeleton and lives fixed to the sea floor
          chimpanzee | chimpanzee,chimp | an intelligent ape of the forests of central africa
          hen | hen,chicken | an adult female chicken kept for its eggs
        plant | plant,flora | a living organism lacking the power of locomotion
          vascular_plant | vascular_plant | green plant having a vascular system
            herb | herb,herbaceous_plant | a plant lacking a permanent woody stem
              onion.plant | onion,onion_plant | a bulbous garden plant having hollow leaves cultivated for its edible bulb
              pepper.plant | pepper,capsicum | a garden plant bearing large mild thick-walled fruits
          shrub | shrub,bush | a low woody perennial plant with several stems
        person | person,individual,someone | a human being
          worker | worker | a person who works at a specific occupation
            washer.person | washer | someone who washes things for a living
            hanger.person | hanger | a person who hangs something or someone
            cook.person | cook | someone who cooks food
      cell | cell | the basic structural and functional unit of all organisms
        germ_cell | germ_cell,reproductive_cell | a cell that is part of the germ line
          gamete | gamete | a mature sexual reproductive cell
            egg.cell | egg,ovum,egg_cell | the female reproductive cell produced in the ovary
      body_part | body_part | any part of an organism such as an organ or extremity
        head | head | the upper part of the human body containing the face and brain
        ovary | ovary | the female reproductive organ that produces eggs
        hair | hair | a dense growth of threadlike structures covering the body or head
          mop.hair | mop,mop_of_hair,shock | a thick untidy mass of hair on the head
  abstraction | abstraction,abstract_entity | a general concept formed by extracting common features from specific examples
    attribute | attribute | an abstraction belonging to or characteristic of an entity
      property | property | a basic or essential attribute shared by all members of a class
        sharp | sharp,sharpness | the quality of having a thin cutting edge or a fine point
        hot | hot,hotness | the quality of having a high temperature
        cold | cold,coldness | the quality of having a low temperature
        salty | salty,saltiness | the taste experience when salt is taken into the mouth
        white | white,whiteness | the quality of having the color of fresh snow or milk
        spicy | spicy,spiciness | the property of being hot and pungent with spice
        pungent | pungent,pungency | a strong odor or taste property
        soft | soft,softness | the property of giving little resistance to pressure
        fragile | fragile,fragility | the quality of being easily broken or damaged
        greasy | greasy,greasiness | the property of being covered with grease or oil
        round | round,roundness | the property of having a circular shape
        flat.property | flat,flatness | the property of having a smooth level surface
        heavy | heavy,heaviness | the property of being comparatively great in weight
        warm | warm,warmth | the quality of giving or keeping in heat
        absorbent | absorbent,absorbency | the property of soaking up liquid
        toxic | toxic,toxicity | the quality of being poisonous
        fuzzy | fuzzy,fuzziness | the property of being covered with fine soft fibers
        wet | wet,wetness | the condition of containing or being covered with water
        slippery | slippery,slipperiness | the property of being smooth and difficult to hold
        dirty | dirty,dirtiness | the state of being soiled with dirt and grime
        loud | loud,loudness | the quality of making a lot of noise
        disposable | disposable,disposability | the quality of being thrown away after use
        magnetic | magnetic,magnetism | the property of attracting iron
        rusty | rusty,rustiness | the state of being covered with rust
        alive | alive,aliveness | the state of being alive and living
        golden | golden | the quality of being made of gold or colored like gold
        bristly | bristly,bristliness | the property of having stiff hairs or bristles
        powdery | powdery,powderiness | the property of consisting of fine loose particles
        liquid | liquid,liquidness | the property of flowing freely like water
        blue | blue,blueness | the color of the clear sky
        illegal | illegal,illegality | the quality of being forbidden by law
    psychological_feature | psychological_feature | a feature of the mental life of a living organism
      event | event | something that happens at a given place and time
        act | act,deed,human_action | something that people do or cause to happen
          cooking | cook,cooking,cookery | preparing food by the application of heat
          frying | fry,frying | cooking in fat or oil in a pan
          boiling | boil,boiling | cooking in water heated until it bubbles
          baking | bake,baking | cooking by dry heat in an oven
          cutting | cut,cutting | dividing or slicing with a blade
          stirring | stir,stirring | mixing a liquid by moving a spoon around in it
          eating | eat,eating | taking solid food into the mouth
          drinking | drink,drinking | swallowing a liquid such as water or coffee
          serving | serve,serving | presenting food or drink at the table
          seasoning.act | season,seasoning_act | adding salt or spices to food to improve its flavor
          mixing | mix,mixing | combining ingredients together
          washing | wash,washing | cleansing with soap and water
          drying | dry,drying | removing water or moisture
          whitening | whiten,whitening | making something white or lighter in color
          bleach.act | bleach,bleaching | the act of whitening something by chemical bleaching
          pressing | press,pressing | smoothing cloth with a heated iron
          hanging | hang,hanging | suspending something such as clothes from a hook
          carrying | carry,carrying | moving something while supporting it
          wearing | wear,wearing | having clothing on the body
          sleeping | sleep,sleeping | resting in a bed with the eyes closed
          sweeping | sweep,sweeping | cleaning a floor with a broom
          cleaning | clean,cleaning | the act of making something free of dirt
          wiping | wipe,wiping | rubbing a surface with a cloth
          scrubbing | scrub,scrubbing | rubbing hard to clean with a brush
          dusting | dust,dusting | removing dust from furniture with a cloth
          fighting | fight,fighting | the act of fighting with weapons
          golf | golf | a game played on a course in which a club is used to hit a ball
      time_period | time_period,period | an amount of time
        season.time | season | a period of the year such as summer or winter
      spiritual_being | spiritual_being,supernatural_being | an incorporeal being believed to have powers over the natural world
        deity | deity,divinity,god | a supernatural being worshipped as controlling some part of the world
          greek_deity | greek_deity | a deity worshipped by the ancient greeks
            pan.god | pan,goat_god | greek god of fields and woods and shepherds and flocks with the legs and horns and ears of a goat
    group | group,grouping | any number of entities considered as a unit
      press.media | press,public_press | the print media responsible for gathering and publishing news
      biological_group | biological_group | a group of plants or animals
        taxonomic_group | taxonomic_group,taxon | an animal or plant group having natural relations
          genus | genus | a taxonomic group containing one or more species
            mammal_genus | mammal_genus | a genus of mammals
              pan.genus | pan,genus_pan | chimpanzees; a genus of great apes closely related to humans
"""

# Sense rank per lemma when it differs from file order.
SENSE_ORDER = {
    "pan": ["pan.god", "pan.cook", "pan.container", "pan.genus"],
    "iron": ["iron.metal", "iron.appliance"],
    "washer": ["washer.person", "washer.ring", "washer.machine"],
    "onion": ["onion.plant", "onion.food"],
    "egg": ["egg.cell", "egg.food"],
    "pepper": ["pepper.plant", "pepper.spice"],
    "sheet": ["sheet.paper", "sheet.bed"],
    "bleach": ["bleach.act", "bleach.agent"],
    "hanger": ["hanger.person", "hanger.frame"],
    "mop": ["mop.hair", "mop.clean"],
    "sponge": ["sponge.animal", "sponge.clean"],
    "vacuum": ["vacuum.region", "vacuum.appliance"],
    "brush": ["brush.shrubland", "brush.tool"],
    "basket": ["basket.container", "basket.hoop"],
    "oil": ["oil.cooking", "petroleum"],
    "pot": ["pot.cook", "pot.drug"],
    "cook": ["cook.person", "cooking"],
    "trash": ["trash.rubbish", "trash.can"],
}

# (whole, part)
PARTS = [
    ("knife.tool", "edge_tool"),
    ("house", "kitchen"),
    ("house", "bathroom"),
    ("house", "bedroom"),
    ("house", "laundry_room"),
    ("house", "basement"),
    ("kitchen", "pantry"),
    ("dresser", "drawer"),
    ("stove", "oven"),
    ("hen", "egg.food"),
]

GENERAL_COUNTS = {
    "entity": 40000, "physical_entity": 15000, "object": 30000, "whole": 12000,
    "artifact": 9000, "instrumentality": 8000, "matter": 20000, "substance": 14000,
    "food": 25000, "abstraction": 15000, "attribute": 9000, "property": 12000,
    "psychological_feature": 8000, "event": 18000, "act": 16000, "group": 20000,
    "device": 12000, "container": 9000, "covering": 6000, "structure": 11000,
    "building": 9000, "room": 10000, "location": 14000, "region": 9000,
    "living_thing": 6000, "organism": 8000, "animal": 12000, "plant": 11000,
    "person": 30000, "material": 9000, "equipment": 7000, "body_part": 5000,
    "furniture": 4000, "compound": 5000, "element": 6000, "worker": 7000,
    "time_period": 5000, "biological_group": 3000,
}


def parse_taxonomy():
    synsets = []
    stack = []
    for raw in TAXONOMY.strip("\n").splitlines():
        if not raw.strip():
            continue
        indent = len(raw) - len(raw.lstrip(" "))
        depth = indent // 2
        key, lemmas, gloss = [p.strip() for p in raw.strip().split("|")]
        del stack[depth:]
        parent = stack[-1] if stack else None
        synsets.append({"key": key, "lemmas": lemmas.split(","), "gloss": gloss, "parent": parent})
        stack.append(key)
    keys = [s["key"] for s in synsets]
    assert len(keys) == len(set(keys)), "duplicate synset key"
    return synsets


HEADER = [
    "  1 Miniature noun lexicon in the WordNet database format.",
    "  2 Generated by tools/fixtures.py; offsets are byte positions in this file.",
]


def data_line(s, offsets, by_key, children, parts, holonyms):
    ptrs = []
    if s["parent"]:
        ptrs.append(("@", by_key[s["parent"]]))
    ptrs += [("~", c) for c in children.get(s["key"], [])]
    ptrs += [("%p", p) for p in parts.get(s["key"], [])]
    ptrs += [("#p", w) for w in holonyms.get(s["key"], [])]
    words = " ".join(f"{w} 0" for w in s["lemmas"])
    ptr_txt = " ".join(f"{sym} {offsets[k]:08d} n 0000" for sym, k in ptrs)
    head = f"{offsets[s['key']]:08d} 05 n {len(s['lemmas']):02x} {words} {len(ptrs):03d}"
    if ptr_txt:
        head += " " + ptr_txt
    return f"{head} | {s['gloss']}  \n"


def write_lexicon(synsets, out_dir):
    by_key = {s["key"]: s["key"] for s in synsets}
    children = {}
    for s in synsets:
        if s["parent"]:
            children.setdefault(s["parent"], []).append(s["key"])
    parts, holonyms = {}, {}
    for whole, part in PARTS:
        assert whole in by_key and part in by_key, (whole, part)
        parts.setdefault(whole, []).append(part)
        holonyms.setdefault(part, []).append(whole)

    # Pointer fields are fixed width, so line lengths do not depend on offsets.
    offsets = {s["key"]: 0 for s in synsets}
    pos = sum(len(h) + 1 for h in HEADER)
    for s in synsets:
        offsets[s["key"]] = pos
        pos += len(data_line(s, offsets, by_key, children, parts, holonyms).encode())
    lines = [data_line(s, offsets, by_key, children, parts, holonyms) for s in synsets]
    text = "".join(h + "\n" for h in HEADER) + "".join(lines)
    for s, line in zip(synsets, lines):
        assert text.encode()[offsets[s["key"]]:].startswith(line.encode())

    senses = {}
    for s in synsets:
        for lemma in s["lemmas"]:
            senses.setdefault(lemma.lower(), []).append(s["key"])
    for lemma, order in SENSE_ORDER.items():
        assert sorted(order) == sorted(senses[lemma]), (lemma, senses[lemma])
        senses[lemma] = order

    index_lines = []
    for lemma in sorted(senses):
        keys = senses[lemma]
        symbols = set()
        for k in keys:
            s = next(x for x in synsets if x["key"] == k)
            if s["parent"]:
                symbols.add("@")
            if children.get(k):
                symbols.add("~")
            if parts.get(k):
                symbols.add("%p")
            if holonyms.get(k):
                symbols.add("#p")
        symbols = sorted(symbols)
        fields = [lemma, "n", str(len(keys)), str(len(symbols)), *symbols, str(len(keys)), "0"]
        fields += [f"{offsets[k]:08d}" for k in keys]
        index_lines.append(" ".join(fields) + "  \n")

    os.makedirs(out_dir, exist_ok=True)
    with open(os.path.join(out_dir, "data.noun"), "w") as f:
        f.write(text)
    with open(os.path.join(out_dir, "index.noun"), "w") as f:
        f.write("".join(h + "\n" for h in HEADER))
        f.write("".join(index_lines))
    return offsets, senses


def write_frequencies(synsets, path):
    counts = {}
    for i, s in enumerate(synsets):
        head = s["lemmas"][0].lower()
        counts.setdefault(head, 120 + (i * 37) % 900)
    counts.update(GENERAL_COUNTS)
    with open(path, "w") as f:
        f.write("# word<TAB>count from a small reference corpus\n")
        for w in sorted(counts):
            f.write(f"{w}\t{counts[w]}\n")
    return counts


STOPWORDS = """a about above after again against all also am an and any are as at be because been
before being below between both but by can could did do does doing down during each few for from
further had has have having he her here hers him his how i if in into is it its itself just me more
most my no nor not now of off on once only or other our out over own same she should so some such
than that the their them then there these they this those through to too under until up very was
we were what when where which while who whom why will with would you your usually often especially
such one two three many several used use"""


def main():
    synsets = parse_taxonomy()
    os.makedirs(ROOT, exist_ok=True)
    write_lexicon(synsets, os.path.join(ROOT, "lexicon"))
    counts = write_frequencies(synsets, os.path.join(ROOT, "frequencies.tsv"))
    with open(os.path.join(ROOT, "stopwords.txt"), "w") as f:
        f.write("# one stopword per line\n")
        for w in sorted(set(STOPWORDS.split())):
            f.write(w + "\n")
    sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))
    import corpus
    corpus.write_all(ROOT)
    n = sum(counts.values())
    print(f"{len(synsets)} synsets, {len(counts)} counted words (N={n})")


if __name__ == "__main__":
    main()
