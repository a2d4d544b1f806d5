"""Writes framed surgery presentations under presentations/ from corpus diagrams."""

import json
import pathlib

HERE = pathlib.Path(__file__).resolve().parent
PRESENTATIONS = {
    "sphere": (None, []),
    "lens_5_1": ("unknot", [5]),
    "sphere_times_circle": ("unknot", [0]),
    "trefoil_minus_one": ("trefoil_pd", [-1]),
    "figure_eight_plus_one": ("knot_4_1", [1]),
    "knot_5_2_three": ("knot_5_2", [3]),
    "hopf_two_minus_three": ("hopf", [2, -3]),
    "hopf_zero_zero": ("hopf", [0, 0]),
    "torus_2_4_one_minus_two": ("torus_2_4", [1, -2]),
    "borromean_one_one_one": ("borromean", [1, 1, 1]),
}


def main():
    out = HERE / "presentations"
    out.mkdir(exist_ok=True)
    for label, (diagram, framings) in PRESENTATIONS.items():
        if diagram is None:
            link = {"crossings": [], "components": []}
        else:
            link = json.loads((HERE / "corpus" / f"{diagram}.json").read_text())
        link["framings"] = framings
        doc = {"label": label, "link": link}
        (out / f"{label}.json").write_text(json.dumps(doc) + "\n")


if __name__ == "__main__":
    main()
