#!/usr/bin/env python3
"""Regenerate the bundled synthetic corpus and gazetteer under data/.

The corpus models a dozen research labs publishing on overlapping
biomedical themes between 2014 and 2024. Labs share a few bridge authors
and co-publish occasionally, so the co-author graph has one giant
component with overlapping community structure; abstracts embed gazetteer
terms so the collocation graph is non-trivial. Output is deterministic
(fixed seed), and the files are committed, so running this script is only
needed after changing the generator.
"""

import json
import random
from pathlib import Path

ROOT = Path(__file__).resolve().parent.parent
DATA = ROOT / "data"

SEED = 20240601

GAZETTEER = [
    # surface, canonical id, type
    ("chloroquine", "chloroquine", "drug"),
    ("ribavirin", "ribavirin", "drug"),
    ("remdesivir", "remdesivir", "drug"),
    ("favipiravir", "favipiravir", "drug"),
    ("lopinavir", "lopinavir", "drug"),
    ("dexamethasone", "dexamethasone", "drug"),
    ("oseltamivir", "oseltamivir", "drug"),
    ("tocilizumab", "tocilizumab", "drug"),
    ("interferon beta", "interferon beta", "drug"),
    ("azithromycin", "azithromycin", "drug"),
    ("malaria", "malaria", "disease"),
    ("influenza", "influenza", "disease"),
    ("pneumonia", "pneumonia", "disease"),
    ("hepatitis", "hepatitis", "disease"),
    ("liver damage", "liver damage", "disease"),
    ("sepsis", "sepsis", "disease"),
    ("bronchitis", "bronchitis", "disease"),
    ("encephalitis", "encephalitis", "disease"),
    ("myocarditis", "myocarditis", "disease"),
    ("pulmonary fibrosis", "pulmonary fibrosis", "disease"),
    ("spike glycoprotein", "spike glycoprotein", "protein"),
    ("viral protease", "viral protease", "protein"),
    ("rna polymerase", "rna polymerase", "protein"),
    ("hemagglutinin", "hemagglutinin", "protein"),
    ("neuraminidase", "neuraminidase", "protein"),
    ("ace2 receptor", "ace2 receptor", "protein"),
    ("interleukin-6", "interleukin-6", "protein"),
    ("tnf-alpha", "tnf-alpha", "protein"),
    ("ferritin", "ferritin", "protein"),
    ("orf1ab", "orf1ab", "gene"),
    ("nsp12", "nsp12", "gene"),
    ("tlr7", "tlr7", "gene"),
    ("ifitm3", "ifitm3", "gene"),
    ("isg15", "isg15", "gene"),
    ("t cell", "t cell", "cell"),
    ("b cell", "b cell", "cell"),
    ("macrophage", "macrophage", "cell"),
    ("dendritic cell", "dendritic cell", "cell"),
    ("epithelial cell", "epithelial cell", "cell"),
    ("monocyte", "monocyte", "cell"),
]

TOPICS = [
    "viral entry mechanisms", "antiviral drug screening", "epitope mapping",
    "antibody neutralization", "cytokine signaling", "protein structure prediction",
    "zoonotic spillover", "vaccine adjuvants", "host immune evasion",
    "gene expression profiling", "respiratory pathology", "drug repurposing",
    "clinical trial design", "viral genome sequencing", "kinase inhibitors",
    "mucosal immunity", "computational epidemiology", "airborne transmission",
    "receptor binding assays", "monoclonal antibodies", "immune memory",
    "viral replication kinetics", "interferon response", "cell culture models",
]

POPULATIONS = [
    "immunocompromised patients", "elderly patients", "pediatric patients",
    "pregnant women", "healthcare workers", "transplant recipients",
    "dialysis patients", "asthmatic adults",
]

OUTCOMES = [
    "mortality", "viral clearance", "hospitalization length",
    "symptom duration", "antibody titer", "icu admission",
    "readmission rate", "adverse events",
]

EXTRA_INTERVENTIONS = ["mechanical ventilation", "convalescent plasma", "prone positioning"]

AFFILIATIONS = [
    "University of Northfield", "Meridian Institute of Virology",
    "Coastal Medical College", "Helix Genomics Center", "St. Alder Hospital",
    "Granite Valley University", "Institute for Immune Biology",
    "Lakeview School of Public Health", "Redwood Computational Lab",
    "Harbor Point University", "Summit Clinical Research Center",
    "Blackwell Institute of Medicine",
]

JOURNALS = [
    "Journal of Viral Research", "Clinical Infection Reports",
    "Immunity and Host Defense", "Computational Biology Letters",
    "Respiratory Medicine Quarterly", "Antiviral Therapy Advances",
]

FIRST_NAMES = [
    "Alice", "Bruno", "Chen", "Dana", "Elif", "Farid", "Grace", "Hiro",
    "Ingrid", "Jonas", "Katya", "Liam", "Mei", "Noor", "Owen", "Priya",
    "Quentin", "Rosa", "Sven", "Tara", "Umar", "Vera", "Wren", "Ximena",
    "Yusuf", "Zofia",
]

LAST_NAMES = [
    "Varga", "Okafor", "Lindqvist", "Marchetti", "Novak", "Petrov", "Quispe",
    "Rahman", "Sato", "Teixeira", "Ueda", "Vance", "Whitfield", "Xu",
    "Yilmaz", "Zhang", "Abadi", "Brandt", "Castillo", "Dimitrov", "Eriksen",
    "Fontaine", "Guerrero", "Haddad", "Ivanova", "Jansen",
]

SENTENCE_TEMPLATES = [
    "{e1} reduced {e2} severity in treated cohorts.",
    "We observed that {e1} modulates {e2} expression during infection.",
    "Treatment with {e1} was associated with lower {e2} markers.",
    "Binding of {e1} to {e2} was characterized by surface assays.",
    "Exposure to {e1} altered {e2} counts across replicates.",
    "{e1} and {e2} levels correlated in the patient cohort.",
    "Inhibition of {e1} suppressed {e2} replication in culture.",
    "The assay linked {e1} with {e2} in a dose-dependent manner.",
]

FILLER_SENTENCES = [
    "Samples were collected under a standardized protocol.",
    "Statistical analysis used mixed-effects regression.",
    "The cohort was followed for twelve months.",
    "Results were replicated at two independent sites.",
    "Study limitations include a modest sample size.",
    "Sequencing depth exceeded quality thresholds in all runs.",
]

TITLE_TEMPLATES = [
    "Effects of {e1} on {e2} in {pop}",
    "A cohort study of {e1} and {e2}",
    "{e1} interactions with {e2}: a systematic analysis",
    "Profiling {e1} responses alongside {e2}",
    "Evaluating {e1} against {e2} outcomes",
]


def _make_labs(rng):
    """12 labs: member authors, topic/affiliation profiles, bridge authors."""
    names = [f"{first} {last}" for first in FIRST_NAMES for last in LAST_NAMES]
    rng.shuffle(names)
    cursor = 0
    labs = []
    for lab_id in range(12):
        size = rng.randint(8, 13)
        members = names[cursor : cursor + size]
        cursor += size
        labs.append(
            {
                "id": lab_id,
                "members": members,
                "topics": rng.sample(TOPICS, rng.randint(3, 5)),
                "affiliations": rng.sample(AFFILIATIONS, rng.randint(1, 2)),
                "drugs": rng.sample([g[0] for g in GAZETTEER if g[2] == "drug"], 4),
                "others": rng.sample([g[0] for g in GAZETTEER if g[2] != "drug"], 8),
            }
        )
    # Bridge authors: labs 0..9 form a chain (lab i shares one author with
    # lab i+1); labs 10 and 11 stay connected through co-published papers.
    for i in range(9):
        shared = labs[i]["members"][-1]
        labs[i + 1]["members"][0] = shared
    return labs


def _sentence(rng, lab):
    template = rng.choice(SENTENCE_TEMPLATES)
    e1 = rng.choice(lab["drugs"] + lab["others"])
    e2 = rng.choice([e for e in lab["drugs"] + lab["others"] if e != e1])
    return template.format(e1=e1, e2=e2)


def _paper(rng, lab, paper_id, year, coauthor_lab=None):
    members = lab["members"]
    authors = rng.sample(members, min(rng.randint(2, 5), len(members)))
    if coauthor_lab is not None:
        authors += rng.sample(coauthor_lab["members"], 2)
    e1 = rng.choice(lab["drugs"])
    e2 = rng.choice(lab["others"])
    title = rng.choice(TITLE_TEMPLATES).format(e1=e1, e2=e2, pop=rng.choice(POPULATIONS))
    body = [_sentence(rng, lab) for _ in range(rng.randint(2, 4))]
    body += rng.sample(FILLER_SENTENCES, rng.randint(1, 2))
    rng.shuffle(body)
    facets = {
        "population": rng.sample(POPULATIONS, rng.randint(0, 2)),
        "intervention": rng.sample(lab["drugs"] + EXTRA_INTERVENTIONS, rng.randint(1, 3)),
        "outcome": rng.sample(OUTCOMES, rng.randint(0, 2)),
    }
    topics = rng.sample(lab["topics"], rng.randint(2, min(4, len(lab["topics"]))))
    if coauthor_lab is not None:
        topics += rng.sample(coauthor_lab["topics"], 1)
    return {
        "paper_id": paper_id,
        "title": title,
        "abstract": " ".join(body),
        "authors": authors,
        "affiliations": sorted(set(lab["affiliations"] + (coauthor_lab["affiliations"] if coauthor_lab else []))),
        "journal": rng.choice(JOURNALS),
        "year": year,
        "facets": facets,
        "topics": topics,
    }


def generate():
    rng = random.Random(SEED)
    labs = _make_labs(rng)
    papers = []
    serial = 0

    def next_id():
        nonlocal serial
        serial += 1
        return f"p{serial:04d}"

    for lab in labs:
        for _ in range(rng.randint(15, 18)):
            year = rng.choices(
                population=list(range(2014, 2025)),
                weights=[1, 1, 2, 3, 4, 5, 6, 6, 5, 4, 3],
            )[0]
            papers.append(_paper(rng, lab, next_id(), year))

    # Cross-lab collaborations keep labs 10 and 11 attached to the giant
    # component and create social meta-edges.
    for a, b in [(0, 10), (10, 11), (3, 11), (5, 8), (2, 7)]:
        year = rng.randint(2018, 2024)
        papers.append(_paper(rng, labs[a], next_id(), year, coauthor_lab=labs[b]))

    # Edge cases: a consortium paper (author-pair cap), an author-less
    # survey, a pre-window paper, punctuation-only and messy author names,
    # and a paper with precomputed entity mentions.
    consortium_authors = sorted({name for lab in labs for name in lab["members"]})[:55]
    papers.append(
        {
            "paper_id": next_id(),
            "title": "Multi-site surveillance of influenza and pneumonia admissions",
            "abstract": "A registry analysis. Influenza and pneumonia burden was tracked.",
            "authors": consortium_authors,
            "affiliations": sorted(AFFILIATIONS),
            "journal": JOURNALS[0],
            "year": 2021,
            "facets": {"population": ["elderly patients"], "intervention": [], "outcome": ["mortality"]},
            "topics": ["computational epidemiology"],
        }
    )
    papers.append(
        {
            "paper_id": next_id(),
            "title": "Editorial: reporting standards for antiviral trials",
            "abstract": "",
            "authors": [],
            "year": 2020,
            "journal": JOURNALS[1],
        }
    )
    papers.append(
        {
            "paper_id": next_id(),
            "title": "Historical notes on chloroquine and malaria prophylaxis",
            "abstract": "Chloroquine was widely deployed against malaria. Dr. Ruiz reviewed archival dosing records.",
            "authors": ["M. Ruiz", "..."],
            "affiliations": ["Coastal Medical College"],
            "journal": JOURNALS[5],
            "year": 2015,
            "facets": {"population": [], "intervention": ["chloroquine"], "outcome": []},
            "topics": ["drug repurposing"],
        }
    )
    papers.append(
        {
            "paper_id": next_id(),
            "title": "Annotated case report: tocilizumab in sepsis",
            "abstract": "Tocilizumab administration preceded sepsis resolution. Ferritin dropped steadily.",
            "authors": [labs[4]["members"][0], labs[4]["members"][1]],
            "affiliations": labs[4]["affiliations"],
            "journal": JOURNALS[2],
            "year": 2022,
            "entities": [
                {"text": "tocilizumab", "id": "tocilizumab", "type": "drug"},
                {"text": "sepsis", "id": "sepsis", "type": "disease"},
                {"text": "ferritin", "id": "ferritin", "type": "protein"},
            ],
            "facets": {"population": [], "intervention": ["tocilizumab"], "outcome": ["viral clearance"]},
            "topics": rng.sample(labs[4]["topics"], 2),
        }
    )

    DATA.mkdir(exist_ok=True)
    corpus_path = DATA / "sample_corpus.jsonl"
    with open(corpus_path, "w", encoding="utf-8") as fh:
        for paper in papers:
            fh.write(json.dumps(paper, ensure_ascii=False, sort_keys=True) + "\n")
    gazetteer_path = DATA / "sample_gazetteer.tsv"
    with open(gazetteer_path, "w", encoding="utf-8") as fh:
        fh.write("# surface_term\tcanonical_id\tentity_type\n")
        for surface, canonical_id, entity_type in GAZETTEER:
            fh.write(f"{surface}\t{canonical_id}\t{entity_type}\n")
    print(f"wrote {corpus_path} ({len(papers)} papers)")
    print(f"wrote {gazetteer_path} ({len(GAZETTEER)} terms)")


if __name__ == "__main__":
    generate()
