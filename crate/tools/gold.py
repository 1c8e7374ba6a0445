#!/usr/bin/env python3
"""Writes data/scenarios/<name>/gold.tsv from hand-labeled facts.

The candidate targets for each seed are the nodes of the generated network
(one `generate` run per scenario), so every labeled triple is one the
evaluator queries. Labels never look at the network's edges: IsA is true
exactly when the target synset is the correct sense or one of its hypernyms
in the fixture taxonomy, and every other relation is true exactly when it
is listed below.

usage: tools/gold.py [path/to/situnet]
"""

import os
import subprocess
import sys
import tempfile

HERE = os.path.dirname(os.path.abspath(__file__))
sys.path.insert(0, HERE)
import fixtures  # noqa: E402

DATA = os.path.join(HERE, "..", "data")

# seed: (correct sense key, locations, properties, uses)
FACTS = {
    "recipe": {
        "pan": ("pan.cook", "kitchen cupboard stove", "hot", "cook fry"),
        "saucepan": ("saucepan", "kitchen cupboard stove", "hot", "cook boil"),
        "frying_pan": ("frying_pan", "kitchen cupboard stove", "hot", "cook fry"),
        "pot": ("pot.cook", "kitchen cupboard stove", "hot heavy round", "cook boil"),
        "stove": ("stove", "kitchen", "hot heavy", "cook boil fry"),
        "oven": ("oven", "kitchen", "hot heavy", "cook bake"),
        "knife": ("knife.tool", "kitchen drawer table", "sharp", "cut"),
        "spoon": ("spoon.cutlery", "kitchen drawer table", "", "stir eat serve mix"),
        "bowl": ("bowl.vessel", "kitchen cupboard table", "round", "mix serve eat"),
        "plate": ("plate.dish", "kitchen cupboard table", "flat round fragile", "serve eat"),
        "cup": ("cup.crockery", "kitchen cupboard table", "fragile round", "drink"),
        "garlic": ("garlic", "kitchen pantry", "pungent white", "season cook"),
        "onion": ("onion.food", "kitchen pantry", "pungent", "cook"),
        "salt": ("salt.food", "kitchen pantry shelf table", "salty white", "season"),
        "pepper": ("pepper.spice", "kitchen pantry shelf table", "spicy pungent", "season"),
        "butter": ("butter", "kitchen refrigerator", "soft greasy", "bake fry cook"),
        "egg": ("egg.food", "kitchen refrigerator", "fragile", "bake cook eat"),
        "flour": ("flour", "kitchen pantry cupboard shelf", "powdery white", "bake"),
        "oil": ("oil.cooking", "kitchen pantry cupboard shelf", "greasy liquid", "fry cook"),
    },
    "laundry": {
        "washer": ("washer.machine", "laundry_room basement house", "heavy", "wash"),
        "dryer": ("dryer.machine", "laundry_room basement house", "heavy hot warm", "dry"),
        "detergent": ("detergent", "laundry_room house", "toxic", "wash"),
        "bleach": ("bleach.agent", "laundry_room house", "toxic", "whiten wash"),
        "sock": ("sock", "drawer dresser bedroom house", "soft warm", "wear"),
        "shirt": ("shirt", "closet dresser drawer bedroom house", "soft", "wear"),
        "towel": ("towel", "bathroom closet house", "soft absorbent", "dry"),
        "sheet": ("sheet.bed", "bed bedroom closet house", "soft", "sleep"),
        "iron": ("iron.appliance", "laundry_room house", "hot heavy", "press"),
        "hanger": ("hanger.frame", "closet bedroom house", "", "hang"),
        "basket": ("basket.container", "laundry_room house", "", "carry"),
        "lint": ("lint", "dryer laundry_room house", "fuzzy soft", ""),
        "jeans": ("jeans", "closet drawer dresser bedroom house", "blue", "wear"),
        "sweater": ("sweater", "closet drawer dresser bedroom house", "soft warm", "wear"),
        "blanket": ("blanket", "bed bedroom closet house", "soft warm", "sleep"),
    },
    "cleaning": {
        "broom": ("broom", "closet house", "bristly", "sweep clean"),
        "mop": ("mop.clean", "closet house", "wet absorbent", "clean"),
        "rag": ("rag", "garage house", "dirty absorbent", "wipe dust clean"),
        "sponge": ("sponge.clean", "sink kitchen house", "absorbent wet", "scrub wipe clean wash"),
        "soap": ("soap", "bathroom sink kitchen house", "slippery", "wash clean"),
        "bucket": ("bucket", "garage closet house", "", "carry"),
        "vacuum": ("vacuum.appliance", "closet house", "loud", "clean"),
        "paper_towel": ("paper_towel", "kitchen house", "absorbent disposable", "wipe"),
        "brush": ("brush.tool", "bathroom house", "bristly", "scrub clean"),
        "dustpan": ("dustpan", "closet house", "", "sweep"),
        "duster": ("duster", "closet house", "", "dust clean"),
    },
}

KIND_RELATION = {"concept": "IsA", "location": "AtLocation", "property": "HasProperty", "affordance": "UsedFor"}


def taxonomy():
    synsets = fixtures.parse_taxonomy()
    with tempfile.TemporaryDirectory() as d:
        offsets, _ = fixtures.write_lexicon(synsets, d)
    parent = {s["key"]: s["parent"] for s in synsets}
    return parent, {k: f"{o:08d}-n" for k, o in offsets.items()}


def ancestors(key, parent):
    out = []
    while key is not None:
        out.append(key)
        key = parent[key]
    return out


def graph_nodes(exe, scenario):
    conf = os.path.join(DATA, "scenarios", scenario, "scenario.conf")
    with tempfile.TemporaryDirectory() as d:
        subprocess.run([exe, "generate", "--config", conf, "--out", d], check=True, stdout=subprocess.DEVNULL)
        with open(os.path.join(d, "graph.tsv")) as f:
            lines = f.read().splitlines()
    nodes = []
    for line in lines:
        f = line.split("\t")
        if f[0] == "NODE":
            nodes.append((f[1], f[2], f[3]))
    return nodes


def gold_lines(scenario, nodes, parent, ids):
    out = []
    for seed, (sense, locs, props, uses) in FACTS[scenario].items():
        out.append(f"SENSE\t{seed}\t{ids[sense]}")
        closure = {ids[k] for k in ancestors(sense, parent)}
        truth = {"AtLocation": set(locs.split()), "HasProperty": set(props.split()), "UsedFor": set(uses.split())}
        for name, kind, synset in nodes:
            rel = KIND_RELATION.get(kind)
            if rel is None:
                continue
            if rel == "IsA":
                label = synset in closure
            else:
                label = name.split(":")[0] in truth[rel]
            out.append(f"REL\t{seed}\t{rel}\t{name}\t{int(label)}")
    return out


def main():
    exe = sys.argv[1] if len(sys.argv) > 1 else os.path.join(HERE, "..", "target", "debug", "situnet")
    parent, ids = taxonomy()
    for scenario in FACTS:
        nodes = graph_nodes(exe, scenario)
        lines = gold_lines(scenario, nodes, parent, ids)
        path = os.path.join(DATA, "scenarios", scenario, "gold.tsv")
        with open(path, "w") as f:
            f.write(f"# {scenario}: hand-labeled seed senses and relation truth values\n")
            f.write("\n".join(lines) + "\n")
        print(f"{scenario}: {len(lines)} labels")


if __name__ == "__main__":
    main()
