"""Leader placement on the 11-node sensor network from data/ex16.json.

Prints the plan as JSON and writes a Graphviz file with the leaders highlighted.
"""

import argparse
import json
from pathlib import Path

from coverdeal import load_graph_json, plan_placement, to_dot
from coverdeal.graph import as_graph

ROOT = Path(__file__).resolve().parent.parent


def main() -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--input", default=str(ROOT / "data" / "ex16.json"))
    ap.add_argument("--dot", default="wsn.dot", help="where to write the DOT file")
    args = ap.parse_args()

    graph = as_graph(load_graph_json(json.loads(Path(args.input).read_text())))
    plan = plan_placement(graph)
    print(json.dumps(plan.to_json(), indent=2))
    Path(args.dot).write_text(to_dot(graph, leaders=plan.leaders))
    print(f"wrote {args.dot}  (render with: dot -Tpng {args.dot} -o wsn.png)")


if __name__ == "__main__":
    main()
