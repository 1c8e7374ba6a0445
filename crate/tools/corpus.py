"""Document corpus, relation dump and scenario inputs for tools/fixtures.py."""

import json
import os

DOCS = [
    ("Kitchen", "A kitchen is a room used for cooking and food preparation. A kitchen has a stove, an oven, a sink, "
     "a refrigerator, a counter and a cupboard. Cooking utensils such as a pan, a pot, a skillet and a saucepan are kept "
     "in the kitchen cupboard. Knives and spoons are kept in a kitchen drawer. Plates, bowls and cups are stored on a "
     "kitchen shelf or in the cupboard. Food, spices and ingredients are kept in the pantry next to the kitchen."),
    ("Cooking", "Cooking is preparing food with heat. To cook a meal, a cook uses a stove, an oven, a pan, a pot or a "
     "saucepan. Cooking methods include frying, boiling, baking and roasting. Ingredients such as onion, garlic, butter, "
     "oil, egg and flour are combined and seasoned with salt and pepper. The cooking utensil gets hot on the stove."),
    ("Cookware", "Cookware is the set of cooking utensils used in a kitchen: the frying pan, the saucepan, the stock pot "
     "and the wok. A cooking pan is a wide metal vessel with a handle. Cookware is made of metal such as steel, "
     "aluminium or cast iron so that it does not melt on a hot stove. Cookware is kept in a kitchen cupboard."),
    ("Frying pan", "A frying pan, frypan or skillet is a flat pan used for frying foods. Frying cooks food in hot oil "
     "or butter in a pan on the stove. Eggs, onions and meat are often fried in a skillet. The pan gets very hot."),
    ("Saucepan", "A saucepan is a deep cooking pan with a long handle and a lid, used for boiling, stewing and making "
     "sauces on a stove. Water boils in a saucepan. A saucepan is a common kitchen utensil."),
    ("Pot", "A cooking pot is a deep round metal or earthenware vessel with a handle and lid used for boiling water, "
     "soup and stew on a stove. A heavy pot sits on the stove in the kitchen. Cooks boil pasta in a pot."),
    ("Stove", "A stove, range or cooker is a kitchen appliance used for cooking food. A gas or electric stove has "
     "burners that get hot, and an oven below. Pans and pots are placed on the stove to cook, fry and boil food."),
    ("Oven", "An oven is a kitchen appliance used for baking and roasting. Bread, cake and cookies are baked in a hot "
     "oven. Flour, butter and eggs are mixed to bake a cake. The oven is part of the stove in many kitchens."),
    ("Baking", "Baking is cooking food by dry heat in an oven. Bakers bake bread, cake and pastry from flour, eggs, "
     "butter, sugar and yeast. Baking requires mixing ingredients in a bowl."),
    ("Refrigerator", "A refrigerator or fridge is a kitchen appliance that keeps food cold. Eggs, butter, milk, "
     "cheese and vegetables are kept in the refrigerator. The refrigerator stands in the kitchen."),
    ("Knife", "A kitchen knife is an edge tool used for cutting food. A knife has a sharp pointed blade and a handle. "
     "Chefs cut onions, garlic and meat with a sharp knife on a cutting board. Knives are stored in a kitchen drawer."),
    ("Combat knife", "A combat knife is a weapon used in fighting. Soldiers fight with a knife and a bayonet in "
     "battle. Weapons such as daggers are used for fighting and hunting."),
    ("Cutlery", "Cutlery includes spoons, forks and knives used for eating and serving food. A spoon has a shallow "
     "bowl and a handle and is used to stir soup, eat cereal and serve food. Cutlery is kept in a drawer."),
    ("Tableware", "Tableware is the dishes, plates, bowls, cups and cutlery used at the table to serve and eat food. "
     "Plates are flat and round. A bowl is a round vessel for soup or for mixing. A cup is used for drinking tea and "
     "coffee. Crockery is fragile and breaks when dropped. Dishes are stored in a cupboard."),
    ("Dish", "A dish or plate is a flat piece of dishware on which food is served and eaten at the table. Plates are "
     "round and stacked in the cupboard after washing."),
    ("Cup", "A cup is a small open container with a handle used for drinking coffee, tea or water. Cups are made of "
     "fragile porcelain or ceramic and kept in the kitchen cupboard."),
    ("Bowl", "A bowl is a round open vessel used for holding food, mixing batter and serving soup or salad. Mixing "
     "bowls are kept in the kitchen cupboard."),
    ("Spice", "Spices and seasonings add flavor to food. Salt, pepper, garlic and herbs are common seasonings. To "
     "season a dish, add salt and spices. Spices are kept on a kitchen shelf or in the pantry. Pepper is spicy and "
     "garlic is pungent and aromatic."),
    ("Garlic", "Garlic is an aromatic bulb used as a seasoning in cooking. Its cloves have a pungent flavor and smell. "
     "Garlic is stored in the pantry."),
    ("Salt", "Table salt is white crystalline sodium chloride used to season and preserve food. Salt tastes salty. "
     "A salt shaker sits on the table. Sea salt is made by evaporating sea water."),
    ("Black pepper", "Black pepper is a pungent spicy seasoning made from the dried berry of the pepper vine, used "
     "whole as peppercorns or ground in a pepper mill. It is the most common spice besides salt."),
    ("Onion", "The onion bulb is a vegetable eaten raw or cooked. Chopped onion has a pungent smell that makes people "
     "cry. Onions are fried in oil and used in soups, stews and sauces. Cook the onion bulb until soft; cooks "
     "cook onions with garlic as an ingredient in many dishes. Onions are stored in the pantry."),
    ("Egg", "A chicken egg is an oval food with a fragile shell laid by a hen. Eggs are boiled, fried, scrambled and "
     "used in baking. Eggs are kept in the refrigerator. An egg breaks easily."),
    ("Butter", "Butter is a soft yellow dairy food made by churning cream. Butter is spread on bread and used for "
     "frying and baking. It is greasy and kept cold in the refrigerator."),
    ("Flour", "Flour is a fine white powdery food made by grinding wheat or another cereal grain. Flour is used for "
     "baking bread, cakes and pastry. A bag of flour is stored in the pantry."),
    ("Cooking oil", "Cooking oil is a fatty vegetable liquid such as olive oil or sunflower oil used in frying and "
     "cooking. Oil is greasy and is heated in a frying pan. Bottles of oil are kept in the pantry."),
    ("Pantry", "A pantry or larder is a small storeroom next to the kitchen where food, flour, oil, spices, canned "
     "goods and dishes are stored."),
    ("Supermarket", "A supermarket or grocery store is a large store selling food and household goods. Shoppers buy "
     "groceries, ingredients, detergent and soap at the store and carry them home in a basket or cart."),
    ("Restaurant", "A restaurant is a building where people eat meals served at a table. Cooks prepare food in the "
     "restaurant kitchen and waiters serve plates to guests."),
    ("Greek mythology", "In Greek mythology, Pan is the god of the wild, of shepherds and flocks, of fields and woods. "
     "The goat god has the horns, legs and ears of a goat and plays the pipes. Pan lived in Arcadia, a mountainous "
     "region where shepherds tended their flocks. Greek gods and deities were worshipped in temples."),
    ("Chimpanzee", "Chimpanzees belong to the genus Pan of great apes, closely related to humans. Chimpanzees live "
     "in the forests of central Africa. The genus also includes the bonobo. Apes are mammals."),
    ("Marijuana", "Marijuana, also called pot, grass or weed, is a drug from the cannabis plant. Smoking pot is "
     "illegal in many countries and police arrest drug dealers."),
    ("Flowerpot", "A flowerpot is a clay container in which plants are grown. Garden plants and herbs are cultivated "
     "in pots on a balcony or in the garden."),
    ("Vegetable garden", "A vegetable garden is a plot of ground where plants are cultivated. Gardeners grow onion "
     "plants, pepper plants, tomato plants and herbs. Green pepper plants bear large fruits. The garden is behind the "
     "house on a farm or in a yard."),
    ("Golf", "Golf is a game in which players use golf clubs to hit a ball into holes on a course. Clubs include the "
     "driver, woods, irons and the old spoon club with a wooden head and short shaft."),
    ("Baseball", "Baseball is played on a field with a diamond formed by three bases and home plate, where the batter "
     "stands. The runner must touch each base before scoring. Fans watch games in a stadium."),
    ("Stadium", "A stadium or arena is a large structure for open-air sports such as football, with tiers of seats "
     "for spectators. Some football stadiums are called a bowl, like the Rose Bowl, where bowl games are played."),
    ("Trophy", "A trophy such as a golden loving cup with two handles is awarded to the winner of a competition. The "
     "championship cup is made of gold or silver metal."),
    ("Basketball", "Basketball is played on a court. Players score by throwing the ball through the basket, a metal "
     "hoop with a net mounted on a backboard at each end of the basketball court."),
    ("Petroleum", "Petroleum or crude oil is a dark fossil fuel consisting of hydrocarbons. Crude oil is pumped from "
     "wells and purified in a refinery to make gasoline. Oil is flammable."),
    ("Iron", "Iron is a heavy ductile magnetic metallic element. Pure iron is silver-white but readily rusts in moist "
     "air and becomes rusty. Iron is the main metal in steel. The element iron is found in ore, in blood and in the "
     "core of the earth. Magnets attract iron."),
    ("Blood", "Blood is the red fluid pumped through the body by the heart. Red blood cells contain hemoglobin, a "
     "protein that carries oxygen using iron atoms. A lack of iron in the blood causes anemia."),
    ("Egg cell", "An egg cell or ovum is the female reproductive cell produced in the ovary. During ovulation the ovary "
     "releases an ovum that can be fertilized by a sperm cell."),
    ("Hardware", "A washer is a flat metal or rubber ring placed under a nut or bolt. Washers seal a joint and spread "
     "the load of a fastener. Bolts, nuts, screws and washers are sold in a hardware store."),
    ("Printing", "A printer is a machine that prints text and images on sheets of paper. Each sheet of paper is fed "
     "into the printer. Newspapers are printed on a printing press, and the press reports the news."),
    ("Laundry", "Doing laundry means washing, drying and ironing clothes, towels and bed sheets. Dirty clothes are "
     "collected in a laundry basket or hamper and carried to the laundry room. The washing machine washes clothes "
     "with detergent and water; bleach whitens white clothes. The clothes dryer dries clothes with hot air, and lint "
     "collects in the dryer filter. Clean clothes are hung on hangers in the closet or folded into a dresser drawer."),
    ("Washing machine", "A washing machine, automatic washer or simply washer is a home appliance that washes clothes "
     "and linens. Laundry detergent is added to the washer. The heavy washer stands in the laundry room or basement "
     "of the house next to the dryer."),
    ("Clothes dryer", "A clothes dryer is a home appliance that dries wet clothes by tumbling them in hot heated air. "
     "Fuzzy lint is removed from the dryer lint trap and thrown in the trash. The dryer is in the laundry room."),
    ("Desiccant", "A desiccant or drier is a chemical substance that absorbs moisture and promotes drying. Silica gel "
     "packets are a common desiccant."),
    ("Detergent", "Laundry detergent is a cleansing agent that removes dirt and holds it in suspension during washing. "
     "Detergent is used to wash clothes and dishes. Detergent can be toxic if swallowed and is stored in the laundry "
     "room."),
    ("Bleach", "Bleach is a chemical agent used to whiten clothes and disinfect surfaces. Chlorine bleach is toxic and "
     "must be kept away from children in the laundry room. Bleaching whitens fabric and removes stains."),
    ("Ironing", "Ironing is pressing clothes with a hot electric iron to remove wrinkles. The smoothing iron has a flat "
     "heated metal base. Shirts are ironed and pressed on an ironing board in the laundry room."),
    ("Clothing", "Clothing or clothes are worn on the body. A shirt, sweater, jeans, socks and trousers are common "
     "clothes. People wear clothes to stay warm. Clothes are kept in a closet, wardrobe or dresser in the bedroom."),
    ("Sock", "A sock is a soft warm cloth covering for the foot worn inside a shoe. Pairs of socks are kept in a "
     "dresser drawer in the bedroom. Socks are often lost in the washer or dryer."),
    ("Sweater", "A sweater, jumper or pullover is a warm soft knitted garment made of wool covering the upper body. "
     "Sweaters are folded in a dresser or closet."),
    ("Jeans", "Jeans are trousers made of heavy blue denim. Blue jeans are casual clothes worn by many people and kept "
     "in a closet or dresser."),
    ("Shirt", "A shirt is a garment worn on the upper body with sleeves and a collar. Shirts are ironed and hung on a "
     "hanger in the closet."),
    ("Bedding", "Bedding or bedclothes are the sheets, blankets and pillows used on a bed. A bed sheet is a large "
     "white rectangle of cotton cloth. A warm soft blanket keeps a person warm while they sleep in bed in the "
     "bedroom."),
    ("Towel", "A towel is a soft absorbent piece of cloth used for drying the body after a shower or for wiping "
     "dishes. Towels hang in the bathroom. Paper towels are disposable."),
    ("Closet", "A closet or wardrobe is a small room or cabinet used to store clothes, coats and supplies. Clothes "
     "hang on hangers in the bedroom closet. A broom, a mop and a vacuum cleaner are kept in the utility closet."),
    ("Hanger", "A coat hanger or clothes hanger is a frame of wire, wood or plastic with a hook used to hang clothes "
     "in a closet."),
    ("Execution", "A hangman was a person who hanged criminals at public executions."),
    ("Dresser", "A dresser or chest of drawers is bedroom furniture with drawers for keeping clothes such as socks "
     "and sweaters."),
    ("House", "A house is a building where a family lives. A house has a kitchen, bathroom, bedroom, laundry room, "
     "basement, garage and closets."),
    ("Bathroom", "A bathroom is a room with a toilet, sink, bathtub and shower. Soap and towels are kept in the "
     "bathroom."),
    ("Bedroom", "A bedroom is a room used for sleeping, with a bed, a dresser and a closet."),
    ("Housekeeping", "Housekeeping means cleaning the house: sweeping floors with a broom and dustpan, mopping with a "
     "mop and bucket of soapy water, scrubbing with a brush and a sponge, wiping surfaces with a rag or paper towel, "
     "dusting furniture with a duster, and vacuuming carpets with a vacuum cleaner. Cleaning supplies are kept in a "
     "closet or under the kitchen sink."),
    ("Broom", "A broom is a cleaning implement with stiff bristles on a long handle used to sweep floors. Dust is "
     "swept into a dustpan and thrown in the trash. Brooms are kept in the closet."),
    ("Mop", "A mop is a cleaning implement with absorbent strings or a sponge head on a handle used to clean floors. "
     "The wet mop is wrung out into a bucket of water and stored in the closet or garage."),
    ("Hairstyle", "A mop of hair is a thick untidy mass of hair on the head. A shock of curly hair covers his head."),
    ("Kitchen sponge", "A kitchen sponge is a porous absorbent pad used for washing dishes, scrubbing and wiping "
     "counters. Wipe spills and scrub dirty surfaces with the pad, then rinse it; a wet cleaning sponge is a handy "
     "implement to scrub pans and wipe the table. Wet sponges sit by the kitchen sink."),
    ("Sea sponge", "Sea sponges are primitive marine animals living fixed to the ocean floor. The porous body of a "
     "sponge is supported by a fibrous skeleton. Living sponges are alive and filter sea water."),
    ("Soap", "Soap is a cleansing agent made from fats, used with water for washing hands and cleaning. Wet soap is "
     "slippery. A bar of soap sits by the bathroom sink."),
    ("Bucket", "A bucket or pail is a cylindrical open vessel with a handle used to carry water. A mop bucket is kept "
     "in the garage or closet."),
    ("Vacuum cleaner", "A vacuum cleaner is a loud electrical home appliance that cleans carpets and floors by "
     "suction. The vacuum is kept in the closet."),
    ("Vacuum", "In physics, a vacuum is a region of space devoid of matter. Outer space is a near perfect vacuum "
     "between stars and planets."),
    ("Brush", "A scrub brush has stiff bristles set into a handle and is used for scrubbing floors, pots and the "
     "bathroom. Bristly brushes are kept in the bathroom or under the sink."),
    ("Shrubland", "Brush or brushwood is a dense growth of bushes and shrubs at the edge of a forest. Wildfires spread "
     "quickly through dry brush and woods."),
    ("Rag", "A rag is a small piece of old cloth used for cleaning, dusting and wiping. Dirty rags are kept in the "
     "garage."),
    ("Dustpan", "A dustpan is a flat receptacle into which dust and dirt are swept with a broom."),
    ("Duster", "A feather duster or cloth duster is used for dusting furniture and shelves."),
    ("Paper towel", "A paper towel is a disposable absorbent towel made of paper used for wiping spills in the "
     "kitchen."),
    ("Garage", "A garage is a building or part of a house where a car is parked and tools, buckets and rags are "
     "stored."),
    ("Basement", "A basement or cellar is the lowest floor of a house, below ground. Many houses keep the washer and "
     "dryer in the basement."),
    ("Trash", "Trash, rubbish or garbage is waste material thrown in a trash can or wastebasket and collected from "
     "the house."),
]

# (start, relation, end, weight); terms are fixture-language concepts.
EDGES = [
    # recipe
    ("cooking_utensil", "AtLocation", "kitchen", 4), ("cooking_utensil", "AtLocation", "cupboard", 3),
    ("pan", "AtLocation", "kitchen", 3), ("pot", "AtLocation", "stove", 3), ("frying_pan", "AtLocation", "stove", 3),
    ("kitchen_appliance", "AtLocation", "kitchen", 4), ("stove", "AtLocation", "kitchen", 4),
    ("oven", "AtLocation", "kitchen", 4),
    ("knife", "AtLocation", "drawer", 4), ("spoon", "AtLocation", "drawer", 4),
    ("bowl", "AtLocation", "cupboard", 3), ("plate", "AtLocation", "cupboard", 3), ("cup", "AtLocation", "cupboard", 3),
    ("plate", "AtLocation", "table", 3), ("cup", "AtLocation", "table", 2),
    ("ingredient", "AtLocation", "pantry", 3), ("ingredient", "AtLocation", "store", 3),
    ("ingredient", "AtLocation", "supermarket", 2), ("flavorer", "AtLocation", "shelf", 3),
    ("egg", "AtLocation", "refrigerator", 4), ("butter", "AtLocation", "refrigerator", 4),
    ("cupboard", "AtLocation", "kitchen", 4), ("drawer", "AtLocation", "kitchen", 3),
    ("drawer", "AtLocation", "dresser", 3), ("refrigerator", "AtLocation", "kitchen", 4),
    ("pantry", "AtLocation", "kitchen", 3), ("pantry", "AtLocation", "house", 2),
    ("shelf", "AtLocation", "kitchen", 2), ("shelf", "AtLocation", "store", 2),
    ("table", "AtLocation", "kitchen", 3), ("table", "AtLocation", "restaurant", 2),
    ("sink", "AtLocation", "kitchen", 3), ("sink", "AtLocation", "bathroom", 3), ("sink", "AtLocation", "house", 2),
    ("counter", "AtLocation", "kitchen", 3), ("kitchen", "AtLocation", "house", 4),
    ("store", "AtLocation", "city", 2), ("supermarket", "AtLocation", "city", 2),
    ("knife", "HasProperty", "sharp", 4), ("pan", "HasProperty", "hot", 3), ("pot", "HasProperty", "heavy", 2),
    ("stove", "HasProperty", "hot", 4), ("oven", "HasProperty", "hot", 4),
    ("salt", "HasProperty", "salty", 4), ("salt", "HasProperty", "white", 3), ("pepper", "HasProperty", "spicy", 4),
    ("garlic", "HasProperty", "pungent", 3), ("onion", "HasProperty", "pungent", 3),
    ("butter", "HasProperty", "soft", 3), ("butter", "HasProperty", "greasy", 2), ("egg", "HasProperty", "fragile", 4),
    ("flour", "HasProperty", "white", 3), ("flour", "HasProperty", "powdery", 3),
    ("oil", "HasProperty", "greasy", 4), ("oil", "HasProperty", "liquid", 3),
    ("bowl", "HasProperty", "round", 3), ("plate", "HasProperty", "flat", 3), ("plate", "HasProperty", "round", 2),
    ("cup", "HasProperty", "fragile", 2), ("refrigerator", "HasProperty", "cold", 4),
    ("pan", "UsedFor", "cook", 4), ("frying_pan", "UsedFor", "fry", 4), ("saucepan", "UsedFor", "boil", 4),
    ("pot", "UsedFor", "boil", 3), ("pot", "UsedFor", "cook", 3), ("stove", "UsedFor", "cook", 4),
    ("oven", "UsedFor", "bake", 4), ("knife", "UsedFor", "cut", 4), ("spoon", "UsedFor", "stir", 4),
    ("spoon", "UsedFor", "eat", 3), ("bowl", "UsedFor", "mix", 3), ("plate", "UsedFor", "serve", 3),
    ("plate", "UsedFor", "eat", 2), ("cup", "UsedFor", "drink", 4), ("flavorer", "UsedFor", "season", 4),
    ("flour", "UsedFor", "bake", 4), ("egg", "UsedFor", "bake", 3), ("butter", "UsedFor", "bake", 2),
    ("butter", "UsedFor", "fry", 2), ("oil", "UsedFor", "fry", 4), ("onion", "UsedFor", "cook", 2),
    # senses the recipe scenario does not use
    ("pan", "AtLocation", "arcadia", 2), ("pan", "AtLocation", "forest", 1), ("pot", "HasProperty", "illegal", 2),
    ("pot", "AtLocation", "garden", 1), ("knife", "UsedFor", "fight", 2), ("spoon", "UsedFor", "golf", 1),
    ("bowl", "AtLocation", "stadium", 2), ("cup", "HasProperty", "golden", 2), ("plate", "AtLocation", "diamond", 2),
    ("egg", "AtLocation", "ovary", 2), ("onion", "AtLocation", "garden", 2), ("pepper", "AtLocation", "garden", 2),
    ("oil", "AtLocation", "refinery", 2), ("salt", "AtLocation", "ocean", 1),
    # laundry
    ("washer", "AtLocation", "laundry_room", 4), ("dryer", "AtLocation", "laundry_room", 4),
    ("washer", "AtLocation", "basement", 2), ("dryer", "AtLocation", "house", 2), ("washer", "AtLocation", "house", 2),
    ("detergent", "AtLocation", "laundry_room", 3), ("bleach", "AtLocation", "laundry_room", 3),
    ("basket", "AtLocation", "laundry_room", 2), ("iron", "AtLocation", "laundry_room", 2),
    ("sock", "AtLocation", "drawer", 3), ("sock", "AtLocation", "dresser", 4),
    ("shirt", "AtLocation", "closet", 3), ("sweater", "AtLocation", "dresser", 3),
    ("jeans", "AtLocation", "closet", 2), ("clothing", "AtLocation", "closet", 3),
    ("sheet", "AtLocation", "bed", 3), ("blanket", "AtLocation", "bed", 4), ("towel", "AtLocation", "bathroom", 4),
    ("hanger", "AtLocation", "closet", 4), ("lint", "AtLocation", "dryer", 4), ("lint", "AtLocation", "trash", 2),
    ("laundry_room", "AtLocation", "house", 4), ("laundry_room", "AtLocation", "basement", 2),
    ("closet", "AtLocation", "bedroom", 3), ("closet", "AtLocation", "house", 3),
    ("dresser", "AtLocation", "bedroom", 4), ("dresser", "AtLocation", "house", 2), ("drawer", "AtLocation", "house", 2),
    ("bed", "AtLocation", "bedroom", 4), ("bed", "AtLocation", "house", 2),
    ("bathroom", "AtLocation", "house", 4), ("bedroom", "AtLocation", "house", 4), ("basement", "AtLocation", "house", 3),
    ("garage", "AtLocation", "house", 3), ("trash", "AtLocation", "kitchen", 2),
    ("sock", "HasProperty", "warm", 2), ("sock", "HasProperty", "soft", 2), ("sweater", "HasProperty", "warm", 4),
    ("sweater", "HasProperty", "soft", 3), ("blanket", "HasProperty", "warm", 4), ("blanket", "HasProperty", "soft", 3),
    ("towel", "HasProperty", "absorbent", 4), ("towel", "HasProperty", "soft", 2), ("bleach", "HasProperty", "toxic", 4),
    ("detergent", "HasProperty", "toxic", 2), ("lint", "HasProperty", "fuzzy", 3), ("dryer", "HasProperty", "hot", 3),
    ("iron", "HasProperty", "hot", 4), ("washer", "HasProperty", "heavy", 3), ("jeans", "HasProperty", "blue", 4),
    ("sheet", "HasProperty", "white", 2),
    ("washer", "UsedFor", "wash", 4), ("detergent", "UsedFor", "wash", 4), ("dryer", "UsedFor", "dry", 4),
    ("towel", "UsedFor", "dry", 3), ("bleach", "UsedFor", "whiten", 4), ("iron", "UsedFor", "press", 4),
    ("hanger", "UsedFor", "hang", 4), ("basket", "UsedFor", "carry", 3), ("clothing", "UsedFor", "wear", 4),
    ("sheet", "UsedFor", "sleep", 2), ("blanket", "UsedFor", "sleep", 2),
    ("iron", "AtLocation", "blood", 2), ("iron", "HasProperty", "magnetic", 3), ("iron", "HasProperty", "rusty", 2),
    ("washer", "AtLocation", "bolt", 2), ("washer", "HasProperty", "flat", 2), ("sheet", "AtLocation", "printer", 2),
    ("basket", "AtLocation", "court", 2),
    # cleaning
    ("broom", "AtLocation", "closet", 3), ("mop", "AtLocation", "closet", 2),
    ("cleaning_implement", "AtLocation", "closet", 3), ("sponge", "AtLocation", "sink", 4),
    ("sponge", "AtLocation", "kitchen", 2), ("soap", "AtLocation", "bathroom", 3), ("soap", "AtLocation", "sink", 3),
    ("bucket", "AtLocation", "garage", 2), ("vacuum", "AtLocation", "closet", 3),
    ("paper_towel", "AtLocation", "kitchen", 4), ("rag", "AtLocation", "garage", 2), ("brush", "AtLocation", "bathroom", 2),
    ("sponge", "HasProperty", "absorbent", 4), ("sponge", "HasProperty", "wet", 2), ("mop", "HasProperty", "wet", 3),
    ("rag", "HasProperty", "dirty", 3), ("paper_towel", "HasProperty", "absorbent", 3),
    ("paper_towel", "HasProperty", "disposable", 4), ("soap", "HasProperty", "slippery", 4),
    ("vacuum", "HasProperty", "loud", 4), ("brush", "HasProperty", "bristly", 3), ("broom", "HasProperty", "bristly", 2),
    ("broom", "UsedFor", "sweep", 4), ("dustpan", "UsedFor", "sweep", 3), ("mop", "UsedFor", "clean", 4),
    ("cleaning_implement", "UsedFor", "clean", 4), ("rag", "UsedFor", "wipe", 3), ("rag", "UsedFor", "dust", 2),
    ("duster", "UsedFor", "dust", 4), ("sponge", "UsedFor", "scrub", 3), ("sponge", "UsedFor", "wipe", 3),
    ("soap", "UsedFor", "wash", 4), ("bucket", "UsedFor", "carry", 3), ("vacuum", "UsedFor", "clean", 4),
    ("paper_towel", "UsedFor", "wipe", 4), ("brush", "UsedFor", "scrub", 4),
    ("mop", "AtLocation", "head", 2), ("sponge", "AtLocation", "ocean", 3), ("sponge", "HasProperty", "alive", 2),
    ("brush", "AtLocation", "forest", 2), ("vacuum", "AtLocation", "space", 3),
    # unrelated concepts
    ("cat", "AtLocation", "house", 3), ("dog", "AtLocation", "house", 3), ("car", "AtLocation", "garage", 4),
    ("book", "AtLocation", "shelf", 3), ("pillow", "AtLocation", "bed", 3), ("toothbrush", "AtLocation", "bathroom", 3),
    ("chair", "AtLocation", "kitchen", 2), ("milk", "AtLocation", "refrigerator", 4), ("bread", "AtLocation", "pantry", 2),
    ("fire", "HasProperty", "hot", 4), ("snow", "HasProperty", "white", 3), ("ice", "HasProperty", "cold", 4),
    ("pen", "UsedFor", "write", 4), ("bed", "UsedFor", "sleep", 4), ("chair", "UsedFor", "sit", 4),
]

# Lines that ingestion must reject or skip.
NOISE = [
    "/a/[/r/AtLocation/,/c/fr/poêle/,/c/fr/cuisine/]\t/r/AtLocation\t/c/fr/poêle\t/c/fr/cuisine\t{\"weight\": 2.0}",
    "/a/[/r/UsedFor/,/c/de/besen/,/c/de/fegen/]\t/r/UsedFor\t/c/de/besen\t/c/de/fegen\t{\"weight\": 2.0}",
    "/a/[/r/UsedFor/,/c/en/pan/,/c/de/kochen/]\t/r/UsedFor\t/c/en/pan/n\t/c/de/kochen\t{\"weight\": 1.0}",
    "/a/[/r/HasProperty/,/c/es/sal/,/c/es/salado/]\t/r/HasProperty\t/c/es/sal\t/c/es/salado\t{\"weight\": 1.0}",
    "/a/[/r/RelatedTo/,/c/en/pan/,/c/en/pot/]\t/r/RelatedTo\t/c/en/pan\t/c/en/pot\t{\"weight\": 3.0}",
    "/a/[/r/Synonym/,/c/en/skillet/,/c/en/frying_pan/]\t/r/Synonym\t/c/en/skillet\t/c/en/frying_pan\t{\"weight\": 2.0}",
    "/a/[/r/CapableOf/,/c/en/knife/,/c/en/cut/]\t/r/CapableOf\t/c/en/knife\t/c/en/cut\t{\"weight\": 2.0}",
    "/a/[/r/PartOf/,/c/en/oven/,/c/en/stove/]\t/r/PartOf\t/c/en/oven\t/c/en/stove\t{\"weight\": 1.0}",
    "/a/[/r/HasA/,/c/en/broom/,/c/en/handle/]\t/r/HasA\t/c/en/broom\t/c/en/handle\t{\"weight\": 1.0}",
    "/a/[/r/Antonym/,/c/en/hot/,/c/en/cold/]\t/r/Antonym\t/c/en/hot\t/c/en/cold\t{\"weight\": 2.0}",
    "/a/[/r/UsedFor/,/c/en/pan/,/c/en/cook_food/]\t/r/UsedFor\t/c/en/pan\t/c/en/cook_food\t{\"weight\": 2.0}",
    "/a/[/r/AtLocation/,/c/en/pan/,/c/en/greek_mythology/]\t/r/AtLocation\t/c/en/pan\t/c/en/greek_mythology\t{\"weight\": 1.0}",
    "/a/[/r/AtLocation/,/c/en/sock/,/c/en/sock_drawer/]\t/r/AtLocation\t/c/en/sock\t/c/en/sock_drawer\t{\"weight\": 2.0}",
    "/a/[/r/HasProperty/,/c/en/salt/,/c/en/good_for_you/]\t/r/HasProperty\t/c/en/salt\t/c/en/good_for_you\t{\"weight\": 1.0}",
    "/a/[/r/UsedFor/,/c/en/broom/,/c/en/sweep_floor/]\t/r/UsedFor\t/c/en/broom\t/c/en/sweep_floor\t{\"weight\": 2.0}",
    "/a/[/r/AtLocation/,/c/en/detergent/,/c/en/laundry_aisle/]\t/r/AtLocation\t/c/en/detergent\t/c/en/laundry_aisle\t{\"weight\": 1.0}",
    "/a/[/r/AtLocation/,/c/en/towel/]\t/r/AtLocation\t/c/en/towel",
    "/a/[/r/UsedFor/,/c/en/mop/,/c/en/clean/]\t/r/UsedFor\t/c/en/mop\t/c/en/clean\t{\"weight\": \"high\"}",
]

SCENARIOS = {
    "recipe": ("kitchen", ["pan", "saucepan", "frying_pan", "pot", "stove", "oven", "knife", "spoon", "bowl", "plate",
                           "cup", "garlic", "onion", "salt", "pepper", "butter", "egg", "flour", "oil"]),
    "laundry": ("house", ["washer", "dryer", "detergent", "bleach", "sock", "shirt", "towel", "sheet", "iron",
                          "hanger", "basket", "lint", "jeans", "sweater", "blanket"]),
    "cleaning": ("house", ["broom", "mop", "rag", "sponge", "soap", "bucket", "vacuum", "paper_towel", "brush",
                           "dustpan", "duster"]),
}

WSD_SETS = [
    ["pan", "pot", "stove"],
    ["pan", "garlic", "knife", "spoon"],
    ["iron", "washer", "dryer", "sock"],
    ["mop", "broom", "sponge", "bucket", "soap"],
    ["egg", "flour", "butter"],
    ["sheet", "blanket", "towel"],
    ["pepper", "onion", "salt", "oil"],
    ["vacuum", "brush", "rag", "duster"],
    ["cup", "plate", "bowl", "hanger", "basket"],
    ["bleach", "detergent"],
]


def edge_line(start, rel, end, weight):
    uri = f"/a/[/r/{rel}/,/c/en/{start}/,/c/en/{end}/]"
    meta = json.dumps({"dataset": "/d/fixture/en", "weight": float(weight)})
    return f"{uri}\t/r/{rel}\t/c/en/{start}/n\t/c/en/{end}\t{meta}"


def config_text(environment, min_children=2, seed=7):
    return "\n".join([
        "# paths are relative to this file",
        "lexicon = ../../lexicon",
        "edges = ../../conceptnet.tsv",
        "frequencies = ../../frequencies.tsv",
        "stopwords = ../../stopwords.txt",
        "esa_corpus = ../../esa_corpus.tsv",
        "seeds = seeds.txt",
        "gold = gold.tsv",
        f"environment = {environment}",
        f"min_children = {min_children}",
        "ic_threshold = 5.0",
        "alpha = 0.5",
        "pseudocount = 1.0",
        "n_worlds = 20000",
        "method = lw",
        "samples = 20000",
        f"seed = {seed}",
        "",
    ])


def write_all(root):
    with open(os.path.join(root, "esa_corpus.tsv"), "w") as f:
        f.write("# title<TAB>text, one document per line\n")
        for title, text in DOCS:
            f.write(f"{title}\t{text}\n")
    lines = [edge_line(*e) for e in EDGES] + NOISE
    # deterministic interleaving of noise
    lines.sort(key=lambda l: (hash_key(l), l))
    with open(os.path.join(root, "conceptnet.tsv"), "w") as f:
        f.write("# uri<TAB>relation<TAB>start<TAB>end<TAB>metadata\n")
        for l in lines:
            f.write(l + "\n")
    for name, (env, seeds) in SCENARIOS.items():
        d = os.path.join(root, "scenarios", name)
        os.makedirs(d, exist_ok=True)
        with open(os.path.join(d, "seeds.txt"), "w") as f:
            f.write(f"# {name} scenario seed words\n" + "".join(s + "\n" for s in seeds))
        with open(os.path.join(d, "scenario.conf"), "w") as f:
            f.write(config_text(env))
    d = os.path.join(root, "scenarios", "compression")
    os.makedirs(d, exist_ok=True)
    with open(os.path.join(d, "seeds.txt"), "w") as f:
        f.write("garlic\n")
    with open(os.path.join(d, "scenario.conf"), "w") as f:
        f.write(config_text("kitchen", min_children=1).replace("gold = gold.tsv\n", ""))
    with open(os.path.join(root, "wsd_sets.txt"), "w") as f:
        f.write("# small seed sets, one per line\n")
        for s in WSD_SETS:
            f.write(" ".join(s) + "\n")


def hash_key(line):
    h = 2166136261
    for b in line.encode():
        h = ((h ^ b) * 16777619) & 0xFFFFFFFF
    return h
