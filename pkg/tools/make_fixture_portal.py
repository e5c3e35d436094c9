#!/usr/bin/env python3
"""Regenerate the offline fixture portal under fixtures/.

Produces two listing pages and 30 detail pages in the same layout the
harvester targets, plus the blueprint and a ground-truth file of the
exact field strings extraction should yield. Page files are named
sha256(url).html, matching fixture mode's URL-to-file rule.

The HTML is deliberately messy: ragged whitespace, unclosed tags and
the odd stray close tag, because real portals are like that.
"""

import json
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parents[1] / "src"))
from museum_explorer.harvester import fixture_filename  # noqa: E402

BASE = "https://portal.example/museum/goa"
FIXTURES = Path(__file__).resolve().parents[1] / "fixtures"

# (title, origin_place, object_type, dynasty, material, accession_no, description)
# dynasty/material left "" on a few records to exercise the Unknown path.
ARTIFACTS = [
    ("Seated Vishnu", "Goa Velha", "Sculpture", "Kadamba", "stone", "GOA-0001",
     "Four-armed Vishnu seated in lalitasana."),
    ("Hero  Stone with\n   Battle Scene", "Chandor", "Hero Stone", "Kadamba", "stone", "GOA-0002",
     "Memorial stone depicting a naval engagement."),
    ("Copper Coin of Jayakeshi I", "Goa Velha", "Coin", "Kadamba", "copper", "GOA-0003",
     "Obverse shows a lion; legend in Nagari."),
    ("Temple Door Frame", "Ponda", "Sculpture", "Vijayanagara", "wood", "",
     "Carved frame with floral scrollwork."),
    ("Sati Stone", "Bicholim", "Hero Stone", "Vijayanagara", "stone", "GOA-0005",
     "Commemorates a sati; raised arm with lemon."),
    ("Portrait of a Governor", "Panaji", "Painting", "Portuguese", "canvas", "GOA-0006",
     "Oil portrait, eighteenth century."),
    ("Silver Tanka", "Chandor", "Coin", "Vijayanagara", "silver", "GOA-0007",
     "Silver coin with Garuda emblem."),
    ("Water Jar", "Pernem", "Pottery", "", "terracotta", "GOA-0008",
     "Burnished storage jar with incised bands."),
    ("Standing Lakshmi", "Goa Velha", "Sculpture", "Kadamba", "stone", "GOA-0009",
     "Lakshmi flanked by elephants."),
    ("Inscription Slab of Shashthadeva", "Chandor", "Inscription", "Kadamba", "stone", "GOA-0010",
     "Records a land grant to a temple."),
    ("Bronze Lamp", "Ponda", "Metalware", "Vijayanagara", "bronze", "GOA-0011",
     "Hanging lamp with peacock finial."),
    ("Copper Plate Grant", "Goa Velha", "Inscription", "Kadamba", "copper", "GOA-0012",
     "Three plates strung on a ring seal."),
    ("Ivory Crucifix", "Old Goa", "Sculpture", "Portuguese", "ivory", "GOA-0013",
     "Indo-Portuguese ivory carving."),
    ("Painted Ceiling Panel", "Old Goa", "Painting", "Portuguese", "wood", "",
     "Panel from a church ceiling."),
    ("Maratha Sword", "Bicholim", "Weapon", "Maratha", "steel", "GOA-0015",
     "Curved blade with inscribed hilt."),
    ("Cannon Ball", "Panaji", "Weapon", "Portuguese", "iron", "",
     "Recovered from the Mandovi riverbed."),
    ("Uma Maheshvara", "Ponda", "Sculpture", "Kadamba", "stone", "GOA-0017",
     "Shiva and Parvati with Nandi below."),
    ("Lead Seal", "Goa Velha", "Coin", "", "lead", "GOA-0018",
     "Seal with trident motif, legend worn."),
    ("Spouted Vessel", "Pernem", "Pottery", "Kadamba", "terracotta", "GOA-0019",
     "Ritual vessel with animal-head spout."),
    ("Gold Pagoda", "Chandor", "Coin", "Vijayanagara", "gold", "GOA-0020",
     "Tiny gold coin with seated deity."),
    ("Memorial Stele", "Bicholim", "Hero Stone", "Maratha", "stone", "",
     "Stele with horseman and attendants."),
    ("Dancing Ganesha", "Ponda", "Sculpture", "Kadamba", "stone", "GOA-0022",
     "Eight-armed Ganesha in dance pose."),
    ("Blue-and-White Plate", "Old Goa", "Pottery", "Portuguese", "porcelain", "GOA-0023",
     "Chinese export ware from a Goan convent."),
    ("Palm-Leaf Manuscript Cover", "Pernem", "Woodwork", "Vijayanagara", "wood", "GOA-0024",
     "Painted cover boards for a manuscript."),
    ("Votive Bell", "Ponda", "Metalware", "Maratha", "bronze", "GOA-0025",
     "Temple bell with Garuda crest."),
    ("Miniature Shrine", "Goa Velha", "Sculpture", "Vijayanagara", "stone", "GOA-0026",
     "Portable shrine with pillared niche."),
    ("Glass Bangles", "Chandor", "Ornament", "Kadamba", "glass", "",
     "Fragmentary bangles from excavation."),
    ("Processional Cross", "Old Goa", "Metalware", "Portuguese", "silver", "GOA-0028",
     "Silver-clad cross carried in processions."),
    ("Querns and Grinders", "Pernem", "Tool", "", "stone", "GOA-0029",
     "Household grinding stones."),
    ("Equestrian Hero Stone", "Bicholim", "Hero Stone", "Kadamba", "stone", "GOA-0030",
     "Rider with raised sword, sun and moon above."),
]


def detail_url(n):
    return f"{BASE}/artifact/{n + 1}"


def list_url(page):
    return f"{BASE}/list?page={page}"


def detail_html(n, art):
    title, origin, otype, dynasty, material, accession, desc = art
    dynasty_block = (
        f'<li class="dynasty">\n      {dynasty}</li>' if dynasty else "<!-- no dynasty on record -->"
    )
    accession_block = f'<li class="accession-no">{accession}</li>' if accession else ""
    # note the unclosed <li> items and stray </div>: tolerated on purpose
    return f"""<!doctype html>
<html>
<head><title>Artifact {n + 1} - Fixture Museum of Goa</title>
<body>
  <div id="header"><img src="/logo.png"><h2>Fixture Museum of Goa</h2></div>
  </div>
  <div class="artifact-page">
    <h1 class="artifact-title">
        {title}
    </h1>
    <ul class="meta">
      <li class="origin-place"> {origin}
      <li class="object-type">{otype}</li>
      {dynasty_block}
      <li class="material">
         {material}
      {accession_block}
    </ul>
    <p class="artifact-desc">{desc}</p>
  </div>
</body>
</html>
"""


def listing_html(page, indices, extra_link=None):
    cards = []
    for n in indices:
        cards.append(
            f'<div class="card"><a class="artifact-link" href="/museum/goa/artifact/{n + 1}">'
            f"{ARTIFACTS[n][0]}</a></div>"
        )
    if extra_link is not None:
        # duplicate link also present on the other page: de-dup fodder
        cards.append(
            f'<div class="card"><a class="artifact-link" href="{detail_url(extra_link)}">'
            f"{ARTIFACTS[extra_link][0]} (featured)</a></div>"
        )
    joined = "\n    ".join(cards)
    return f"""<!doctype html>
<html>
<head><title>Collection - page {page}</title>
<body>
  <div class="artifact-grid">
    {joined}
  </div>
  <div class="pager"><a href="/museum/goa/list?page={page + 1}">next</a></div>
</body>
</html>
"""


def collapse(text):
    return " ".join(text.split())


def main():
    portal = FIXTURES / "portal"
    portal.mkdir(parents=True, exist_ok=True)

    truth = {}
    for n, art in enumerate(ARTIFACTS):
        url = detail_url(n)
        (portal / fixture_filename(url)).write_text(detail_html(n, art), encoding="utf-8")
        title, origin, otype, dynasty, material, accession, desc = art
        truth[url] = {
            "title": collapse(title),
            "origin_place": collapse(origin),
            "object_type": collapse(otype),
            "dynasty": collapse(dynasty),
            "material": collapse(material),
            "accession_no": collapse(accession),
            "description": collapse(desc),
        }

    (portal / fixture_filename(list_url(0))).write_text(
        listing_html(0, range(0, 15)), encoding="utf-8"
    )
    (portal / fixture_filename(list_url(1))).write_text(
        listing_html(1, range(15, 30), extra_link=2), encoding="utf-8"
    )

    blueprint = {
        "portal_name": "Fixture Museum of Goa",
        "list_url_template": f"{BASE}/list?page={{page}}",
        "page_start": 0,
        "page_end": 1,
        "item_link_selector": ".artifact-grid a.artifact-link",
        "field_selectors": {
            "title": "h1.artifact-title",
            "origin_place": ".meta .origin-place",
            "object_type": ".meta .object-type",
            "dynasty": ".meta .dynasty",
            "material": ".meta .material",
            "accession_no": ".meta .accession-no",
            "description": "p.artifact-desc",
        },
        "request_delay_ms": 0,
        "fixture_dir": "portal",
    }
    (FIXTURES / "blueprint.json").write_text(
        json.dumps(blueprint, indent=2) + "\n", encoding="utf-8"
    )
    (FIXTURES / "ground_truth.json").write_text(
        json.dumps(truth, ensure_ascii=False, indent=2) + "\n", encoding="utf-8"
    )
    print(f"wrote {len(ARTIFACTS)} detail pages + 2 listing pages to {portal}")


if __name__ == "__main__":
    main()
