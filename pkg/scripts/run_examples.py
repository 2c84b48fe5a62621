"""Full reports for the worked example matrices, as text or JSON into a directory."""

import argparse
import pathlib

from nonkahler.config import Settings
from nonkahler.io import parse_matrix
from nonkahler.report import analysis_doc, analyze, dumps, render_text

EXAMPLES = ["1+1i,1i;1,1", "2,-1+4i;1,2i"] + ["1,%d;1,%d" % (n - 2, n - 1) for n in range(3, 7)]


def main():
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("--out", help="directory for one JSON file per matrix")
    args = ap.parse_args()
    settings = Settings.from_env()
    out = pathlib.Path(args.out) if args.out else None
    if out:
        out.mkdir(parents=True, exist_ok=True)
    for i, text in enumerate(EXAMPLES):
        an = analyze(parse_matrix(text), settings, source=text)
        if out:
            (out / ("example_%02d.json" % i)).write_text(dumps(analysis_doc(an)), encoding="utf-8")
            print("%-16s betti %s  factor %s" % (text, list(an.betti), an.certificate.non_cyclotomic_factor))
        else:
            print(render_text(an))


if __name__ == "__main__":
    main()
