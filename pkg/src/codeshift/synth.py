"""Synthetic template corpus for demos and end-to-end tests.

Each task is written in two styles. The majority style is function-based and
names things after the task's topic; the minority style is class-based, uses
a disjoint synonym vocabulary and a different block structure. Programmers
and timestamps are assigned independently of style.

    python -m codeshift.synth fixtures/demo
"""

from __future__ import annotations

import argparse
import json
import random
from pathlib import Path

TOPICS = [
    ("inventory", "stock", "count"), ("grades", "marks", "score"), ("weather", "climate", "measure"),
    ("traffic", "vehicle", "track"), ("library", "book", "rank"), ("orbit", "planet", "tally"),
    ("harvest", "crop", "weigh"), ("ledger", "account", "audit"), ("signal", "wave", "scan"),
    ("voyage", "journey", "chart"),
]
OPS = ["+", "*", "-", "^", "|", "&", "+", "*", "-", "^"]
CMPS = [">", "<", ">=", "<=", "!=", ">", "<", ">=", "<=", "!="]

READERS = ["sys.stdin.read().split()", "input().split()", "open(0).read().split()"]


def _task_params(k: int) -> dict:
    topic, syn, verb = TOPICS[k]
    op = OPS[k]
    return {
        "topic": topic, "syn": syn, "verb": verb, "op": op, "cmp": CMPS[k],
        "init": "1" if op == "*" else "0", "lits": [3 + 7 * k, 4 + 7 * k, 5 + 7 * k],
    }


def _function_style(p: dict, rng: random.Random) -> str:
    t = p["topic"]
    names = {
        "fn": f"{p['verb']}_{t}", "arg": rng.choice(["values", f"{t}_values"]),
        "acc": f"{t}_total", "it": rng.choice(["x", "v", "item"]), "pos": rng.choice(["i", "idx"]),
        "tok": rng.choice(["t", "s"]), "data": rng.choice(["nums", f"{t}_data"]), "res": "result",
    }
    lit = rng.choice(p["lits"])
    reader = rng.choice(READERS)
    n = dict(names, cmp=p["cmp"], op=p["op"], init=p["init"], lit=lit)
    out = []
    if rng.random() < 0.4:
        out.append(f"# {t} task\n")
    if reader.startswith("sys"):
        out.append("import sys\n\n\n")
    out.append("def {fn}({arg}):\n    {acc} = {init}\n".format(**n))
    loop = rng.choice(["for", "while", "enumerate"])
    if loop == "for":
        out.append("    for {it} in {arg}:\n        if {it} {cmp} {lit}:\n"
                   "            {acc} = {acc} {op} {it}\n".format(**n))
    elif loop == "while":
        out.append("    {pos} = 0\n    while {pos} < len({arg}):\n        {it} = {arg}[{pos}]\n"
                   "        if {it} {cmp} {lit}:\n            {acc} = {acc} {op} {it}\n"
                   "        {pos} += 1\n".format(**n))
    else:
        out.append("    for {pos}, {it} in enumerate({arg}):\n        if {it} {cmp} {lit} and {pos} >= 0:\n"
                   "            {acc} = {acc} {op} {it}\n".format(**n))
    out.append("    return {acc}\n\n\ndef main():\n".format(**n))
    out.append("    {data} = [int({tok}) for {tok} in {reader}]\n".format(reader=reader, **n))
    if rng.random() < 0.3:
        out.append("    if not {data}:\n        print({init})\n        return\n".format(**n))
    if rng.random() < 0.5:
        out.append("    print({fn}({data}))\n".format(**n))
    else:
        out.append("    {res} = {fn}({data})\n    print({res})\n".format(**n))
    out.append("\n\nmain()\n")
    return "".join(out)


def _class_style(p: dict, rng: random.Random) -> str:
    s = p["syn"]
    cap = s.capitalize()
    n = {
        "cls": f"{cap}{rng.choice(['Processor', 'Engine'])}", "meth": f"compute{cap}", "field": f"{s}Items",
        "acc": f"{s}Acc", "idx": f"{s}Idx", "val": f"{s}Val", "barg": f"{s}Input", "data": f"{s}Nums",
        "obj": f"{s}Obj", "cmp": p["cmp"], "op": p["op"], "init": p["init"], "lit": rng.choice(p["lits"]),
        "reader": rng.choice(READERS),
    }
    out = []
    if n["reader"].startswith("sys"):
        out.append("import sys\n\n\n")
    out.append("class {cls}:\n    def __init__(self, {barg}):\n        self.{field} = {barg}\n\n".format(**n))
    if rng.random() < 0.5:
        out.append("    def __len__(self):\n        return len(self.{field})\n\n".format(**n))
    out.append("    def {meth}(self):\n        {acc} = {init}\n        {idx} = 0\n"
               "        while {idx} < len(self.{field}):\n            {val} = self.{field}[{idx}]\n"
               "            if {val} {cmp} {lit}:\n                {acc} {op}= {val}\n"
               "            {idx} += 1\n        return {acc}\n\n\n".format(**n))
    out.append("if __name__ == \"__main__\":\n    {data} = list(map(int, {reader}))\n"
               "    {obj} = {cls}({data})\n".format(**n))
    if rng.random() < 0.5:
        out.append("    print({obj}.{meth}())\n".format(**n))
    else:
        out.append("    sys.stdout.write(str({obj}.{meth}()) + \"\\n\")\n".format(**n)
                   if n["reader"].startswith("sys") else "    print({obj}.{meth}(), end=\"\\n\")\n".format(**n))
    return "".join(out)


def _programmer_sizes(total: int, rng: random.Random) -> list[int]:
    sizes = [1]  # one single-submission programmer per task
    while sum(sizes) < total:
        sizes.append(rng.choice([2, 2, 2, 3, 3]))
    sizes[-1] -= sum(sizes) - total
    if sizes[-1] == 1 and len(sizes) > 2:
        sizes[-2] -= 1
        sizes[-1] += 1
    return [s for s in sizes if s > 0]


def generate(out_dir, *, n_tasks: int = 8, files_per_task: int = 48, minority_per_task: int = 12,
             n_aux_tasks: int = 2, aux_files_per_task: int = 24, seed: int = 2022,
             corpus_id: str = "demo") -> Path:
    out = Path(out_dir)
    rng = random.Random(seed)
    rows = []
    user_pool = [f"user{i:03d}" for i in range(400)]
    specs = [(f"task{k:02d}", k, files_per_task, minority_per_task) for k in range(n_tasks)]
    specs += [(f"aux{j:02d}", n_tasks + j, aux_files_per_task, 0) for j in range(n_aux_tasks)]
    for task_id, k, n_files, n_minor in specs:
        p = _task_params(k)
        minor = set(rng.sample(range(n_files), n_minor))
        users = rng.sample(user_pool, n_files)
        owners: list[str] = []
        for u, size in zip(users, _programmer_sizes(n_files, rng)):
            owners.extend([u] * size)
        rng.shuffle(owners)
        base = 1_600_000_000 + 10_000_000 * k
        stamps = sorted(rng.sample(range(5_000_000), n_files))
        order = list(range(n_files))
        rng.shuffle(order)
        for i in range(n_files):
            src = _class_style(p, rng) if i in minor else _function_style(p, rng)
            fid = f"{task_id}-{i:03d}"
            rel = f"src/{task_id}/{fid}.py"
            path = out / rel
            path.parent.mkdir(parents=True, exist_ok=True)
            path.write_text(src, encoding="utf-8")
            rows.append({"file_id": fid, "path": rel, "language": "python", "task_id": task_id,
                         "programmer_id": owners[i], "timestamp": base + stamps[order[i]]})
    manifest = out / "manifest.jsonl"
    manifest.write_text("".join(json.dumps(r, sort_keys=True) + "\n" for r in rows), encoding="utf-8")
    return manifest


def main(argv=None) -> None:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("out_dir")
    ap.add_argument("--seed", type=int, default=2022)
    ap.add_argument("--tasks", type=int, default=8)
    ap.add_argument("--files-per-task", type=int, default=48)
    ap.add_argument("--minority-per-task", type=int, default=12)
    args = ap.parse_args(argv)
    path = generate(args.out_dir, n_tasks=args.tasks, files_per_task=args.files_per_task,
                    minority_per_task=args.minority_per_task, seed=args.seed)
    print(path)


if __name__ == "__main__":
    main()
