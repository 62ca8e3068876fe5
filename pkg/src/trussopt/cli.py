"""Command-line interface.

Subcommands:
  run      optimize a model, writing convergence.csv and result.json
  verify   evaluate a given area vector on a model (weight + feasibility)
  compare  hybrid vs. plain GA at equal evaluation budgets over seeds
  list     show the built-in benchmark catalog

Exit codes: 0 success, 1 usage error, 2 model error, 3 runtime error.
"""

import argparse
import json
import math
import os
import sys

import numpy as np

from . import analysis, annealing, benchmarks, ga, hybrid, io as model_io
from .model import DOF_NAMES, ModelError


class _Parser(argparse.ArgumentParser):
    # argparse exits with status 2 on usage errors; the contract says 1
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(1)


def load_model(spec):
    """Resolve --model: either 'builtin:NAME' or a JSON document path."""
    if spec.startswith("builtin:"):
        name = spec[len("builtin:"):]
        try:
            return benchmarks.get_builtin(name)
        except KeyError as exc:
            raise ModelError(str(exc)) from None
    if not os.path.exists(spec):
        raise ModelError(f"model file not found: {spec}")
    with open(spec) as fh:
        return model_io.parse_model(fh.read())


def constraint_margins(model, areas):
    """Normalized margins for every constraint at a design; negative
    means slack, positive means violated by that fraction."""
    result = analysis.analyze(model, areas)
    expanded = model.expand_areas(areas)
    margins = []
    for case, cres in zip(model.load_cases, result.cases):
        for e in model.elements:
            g = model.groups[model.group_index()[e.group]]
            s = cres.element_stresses[e.id]
            if s >= 0:
                m = s / g.stress_tension_limit - 1.0
            else:
                m = -s / g.stress_compression_limit - 1.0
                if g.buckling is not None:
                    sb = analysis.buckling_stress_limit(model, e, expanded[e.id])
                    m = max(m, s / sb - 1.0)
            margins.append({"kind": "stress", "case": case.id,
                            "element": e.id, "margin": m})
        for dl in model.displacement_limits:
            for nid in sorted(dl.nodes):
                for dof in sorted(dl.dofs):
                    u = cres.displacements[nid, DOF_NAMES.index(dof)]
                    margins.append({"kind": "displacement", "case": case.id,
                                    "node": nid, "dof": dof,
                                    "margin": abs(u) / dl.limit - 1.0})
    return result.weight, margins


def write_convergence_csv(path, history):
    with open(path, "w") as fh:
        fh.write("generation,best_F,mean_F,best_feasible_weight,"
                 "evaluations,sa_ran\n")
        for st in history:
            if st.generation == 0:
                continue
            bw = "" if math.isnan(st.best_feasible_weight) \
                else f"{st.best_feasible_weight:.6f}"
            fh.write(f"{st.generation},{st.best_F:.6f},{st.mean_F:.6f},"
                     f"{bw},{st.evaluations},{int(st.sa_ran)}\n")


def _hybrid_params(args):
    ga_params = ga.GaParams(
        population_size=args.population,
        max_generations=args.generations,
        seed=args.seed)
    return hybrid.HybridParams(t_sa=args.tsa, ga=ga_params,
                               sa=annealing.SaParams())


def _result_document(model, record):
    best = record.best
    weight, margins = constraint_margins(model, best.design)
    worst = max((m["margin"] for m in margins), default=0.0)
    return {
        "model": model.name,
        "seed": record.seed,
        "best_areas": [float(a) for a in best.design],
        "weight": weight,
        "feasible": record.best_is_feasible,
        "worst_constraint_margin": worst,
        "total_evaluations": record.total_evaluations,
        "generations": record.history[-1].generation,
        "wall_time_seconds": record.wall_time,
        "constraint_margins": margins,
    }


def cmd_run(args):
    model = load_model(args.model)
    params = _hybrid_params(args)
    record = hybrid.run(model, params, seed=args.seed)
    out = args.out or os.path.join("runs", f"{model.name}-seed{args.seed}")
    os.makedirs(out, exist_ok=True)
    write_convergence_csv(os.path.join(out, "convergence.csv"), record.history)
    doc = _result_document(model, record)
    with open(os.path.join(out, "result.json"), "w") as fh:
        json.dump(doc, fh, indent=2)
    flag = "feasible" if doc["feasible"] else "INFEASIBLE"
    print(f"{model.name}: best weight {doc['weight']:.2f} lb ({flag}), "
          f"{doc['total_evaluations']} evaluations")
    print(f"results written to {out}")
    return 0


def cmd_verify(args):
    model = load_model(args.model)
    areas = np.array(args.areas, dtype=float)
    if len(areas) != model.n_groups:
        print(f"error: model has {model.n_groups} design variables, "
              f"got {len(areas)} areas", file=sys.stderr)
        return 1
    weight, margins = constraint_margins(model, areas)
    worst = max((m["margin"] for m in margins), default=0.0)
    feasible = worst <= args.slack
    print(f"weight: {weight:.2f} lb")
    print(f"worst constraint margin: {worst * 100:+.3f}% "
          f"(slack {args.slack * 100:.1f}%)")
    print(f"feasible: {'yes' if feasible else 'no'}")
    return 0


def cmd_compare(args):
    if args.seeds < 5:
        print("error: --seeds must be >= 5", file=sys.stderr)
        return 1
    model = load_model(args.model)
    params = _hybrid_params(args)
    seeds = list(range(args.seed, args.seed + args.seeds))
    summary = hybrid.compare_plain_ga(model, params, seeds)
    print("seed  hybrid_weight  plain_weight")
    for s, hw, pw in zip(summary.seeds, summary.hybrid_weights,
                         summary.plain_weights):
        print(f"{s:4d}  {hw:13.2f}  {pw:12.2f}")
    print(f"median hybrid {summary.hybrid_median:.2f} lb, "
          f"plain {summary.plain_median:.2f} lb")
    if args.out:
        os.makedirs(args.out, exist_ok=True)
        for tag, recs in (("hybrid", summary.hybrid_records),
                          ("plain", summary.plain_records)):
            for rec in recs:
                write_convergence_csv(
                    os.path.join(args.out, f"{tag}-seed{rec.seed}.csv"),
                    rec.history)
        print(f"convergence tables written to {args.out}")
    return 0


def cmd_list(args):
    catalog = benchmarks.builtin_models()
    print(f"{'name':14s} {'members':>7s} {'groups':>6s} {'cases':>5s} "
          f"{'ref weight':>12s}")
    for name, entry in catalog.items():
        m = entry.model
        print(f"{name:14s} {m.n_elements:7d} {m.n_groups:6d} "
              f"{len(m.load_cases):5d} {entry.reference_weight:12.2f}")
    return 0


def _parse_areas(values):
    out = []
    for v in values:
        out.extend(float(p) for p in v.replace(",", " ").split())
    return out


def build_parser():
    parser = _Parser(prog="trussopt",
                     description="Truss sizing optimization (hybrid SA/GA)")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, optimizer=True):
        p.add_argument("--model", required=True,
                       help="path to a JSON model document or builtin:NAME")
        if optimizer:
            p.add_argument("--seed", type=int, default=0)
            p.add_argument("--generations", type=int,
                           default=ga.GaParams().max_generations)
            p.add_argument("--population", type=int,
                           default=ga.GaParams().population_size)
            p.add_argument("--tsa", type=float,
                           default=hybrid.HybridParams().t_sa,
                           help="generations between annealing bursts")

    p_run = sub.add_parser("run", help="optimize a model")
    common(p_run)
    p_run.add_argument("--out", help="output directory "
                       "(default runs/<model>-seed<seed>)")
    p_run.set_defaults(func=cmd_run)

    p_verify = sub.add_parser("verify",
                              help="evaluate an area vector on a model")
    common(p_verify, optimizer=False)
    p_verify.add_argument("--areas", required=True, nargs="+",
                          help="area vector, space or comma separated")
    p_verify.add_argument("--slack", type=float, default=0.005,
                          help="normalized feasibility slack (default 0.005)")
    p_verify.set_defaults(func=cmd_verify)

    p_cmp = sub.add_parser("compare",
                           help="hybrid vs plain GA at equal budgets")
    common(p_cmp)
    p_cmp.add_argument("--seeds", type=int, default=5,
                       help="number of paired seeds (>= 5)")
    p_cmp.add_argument("--out", help="directory for convergence tables")
    p_cmp.set_defaults(func=cmd_compare)

    p_list = sub.add_parser("list", help="show built-in benchmarks")
    p_list.set_defaults(func=cmd_list)
    return parser


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 1
    if args.command == "verify":
        try:
            args.areas = _parse_areas(args.areas)
        except ValueError:
            print("error: --areas must be a list of numbers", file=sys.stderr)
            return 1
    try:
        model_stage = True
        if hasattr(args, "model"):
            # resolve the model first so model errors map to exit code 2
            load_model(args.model)
        model_stage = False
        return args.func(args)
    except (ModelError, model_io.ParseError) as exc:
        print(f"model error: {exc}", file=sys.stderr)
        return 2
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1 if model_stage else 3
    except analysis.AnalysisError as exc:
        print(f"analysis error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
