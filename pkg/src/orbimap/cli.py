"""Command-line interface; a thin client over the HTTP service.

Every command builds a JSON request and posts it to the service, which
runs in process by default or remotely with --server/ORBIMAP_SERVER.
Exit codes: 0 success (or trivial), 1 nontrivial answer or failed
verification, 2 bad input or usage, 3 resource blowup.
"""

from __future__ import annotations

import json
import sys
from typing import Any, NoReturn

import click
import httpx

from .client import ServiceCallError, ServiceClient


def _parse_orders(text: str | None) -> list[int] | None:
    if text is None:
        return None
    try:
        return [int(part) for part in text.split(",") if part.strip() != ""]
    except ValueError:
        raise click.UsageError(f"bad -m value {text!r}, expected comma-separated integers")


@click.group()
@click.option("-n", "--marked", type=int, default=0, show_default=True, help="Marked points.")
@click.option("-L", "--punctures", type=int, default=0, show_default=True, help="Punctures.")
@click.option("-N", "--cones", type=int, default=0, show_default=True, help="Cone points.")
@click.option("-m", "--orders", default=None, help="Cone orders, comma-separated (default all 2).")
@click.option(
    "--server",
    envvar="ORBIMAP_SERVER",
    default=None,
    help="Service URL; in-process when omitted.",
)
@click.option("--json", "as_json", is_flag=True, help="Print raw JSON responses.")
@click.version_option(package_name="orbimap")
@click.pass_context
def main(ctx: click.Context, marked: int, punctures: int, cones: int, orders: str | None,
         server: str | None, as_json: bool) -> None:
    """Words, normal forms, and presentations for orbifold mapping classes."""
    ctx.obj = {
        "params": {"n": marked, "L": punctures, "N": cones, "m": _parse_orders(orders)},
        "server": server,
        "json": as_json,
    }


def _fail(exc: ServiceCallError) -> NoReturn:
    fields = " ".join(f"{k}={v}" for k, v in sorted(exc.fields.items()))
    line = f"error: {exc.error_type}: {exc.message}"
    if fields:
        line += f" [{fields}]"
    click.echo(line, err=True)
    sys.exit(3 if exc.is_blowup else 2)


def _call(ctx: click.Context, path: str, payload: dict[str, Any]) -> dict[str, Any]:
    try:
        with ServiceClient(ctx.obj["server"]) as client:
            return client.call(path, payload)
    except ServiceCallError as exc:
        _fail(exc)
    except httpx.HTTPError as exc:
        click.echo(f"error: ConnectionError: {exc}", err=True)
        sys.exit(2)


def _emit(ctx: click.Context, body: dict[str, Any], human: str) -> None:
    if ctx.obj["json"]:
        click.echo(json.dumps(body, sort_keys=True))
    else:
        click.echo(human)


def _word_payload(ctx: click.Context, word: tuple[str, ...], **extra: Any) -> dict[str, Any]:
    payload: dict[str, Any] = {"params": ctx.obj["params"], "word": " ".join(word)}
    payload.update({k: v for k, v in extra.items() if v is not None})
    return payload


_caps = [
    click.option("--max-syllable", type=int, default=None, help="Syllable length cap."),
    click.option("--max-ops", type=int, default=None, help="Work budget cap."),
    click.option("--certify/--no-certify", default=None, help="Oracle-check the rewrite."),
]


def _with_caps(fn):
    for deco in reversed(_caps):
        fn = deco(fn)
    return fn


@main.command()
@click.argument("word", nargs=-1)
@_with_caps
@click.pass_context
def nf(ctx: click.Context, word: tuple[str, ...], max_syllable: int | None,
       max_ops: int | None, certify: bool | None) -> None:
    """Combing normal form of WORD."""
    body = _call(ctx, "/nf", _word_payload(
        ctx, word, max_syllable=max_syllable, max_ops=max_ops, certify=certify))
    _emit(ctx, body, body["text"])


@main.command()
@click.argument("word", nargs=-1)
@_with_caps
@click.pass_context
def trivial(ctx: click.Context, word: tuple[str, ...], max_syllable: int | None,
            max_ops: int | None, certify: bool | None) -> None:
    """Word problem for WORD; exit 0 if trivial, 1 if not."""
    body = _call(ctx, "/trivial", _word_payload(
        ctx, word, max_syllable=max_syllable, max_ops=max_ops, certify=certify))
    _emit(ctx, body, "trivial" if body["trivial"] else "nontrivial")
    sys.exit(0 if body["trivial"] else 1)


@main.command()
@click.option("--group", type=click.Choice(["pure", "full"]), default="pure", show_default=True)
@click.option("--format", "fmt", type=click.Choice(["text", "json", "algebra"]),
              default="text", show_default=True)
@click.pass_context
def present(ctx: click.Context, group: str, fmt: str) -> None:
    """Finite presentation of the pure or full group."""
    body = _call(ctx, "/present", {"params": ctx.obj["params"], "group": group, "format": fmt})
    _emit(ctx, body, body["text"].rstrip("\n"))


@main.command()
@click.argument("word", nargs=-1)
@click.pass_context
def expand(ctx: click.Context, word: tuple[str, ...]) -> None:
    """Expand pure letters of WORD into the mixed alphabet."""
    body = _call(ctx, "/expand", _word_payload(ctx, word))
    _emit(ctx, body, body["word"])


@main.command()
@click.argument("word", nargs=-1)
@click.option("--certify/--no-certify", default=None, help="Oracle-check the rewrite.")
@click.pass_context
def rewrite(ctx: click.Context, word: tuple[str, ...], certify: bool | None) -> None:
    """Rewrite a permutation-trivial mixed WORD over the pure alphabet."""
    body = _call(ctx, "/rewrite", _word_payload(ctx, word, certify=certify))
    _emit(ctx, body, body["word"])


@main.command()
@click.argument("word", nargs=-1)
@click.pass_context
def push(ctx: click.Context, word: tuple[str, ...]) -> None:
    """Include a top-level free-group WORD into the pure group."""
    body = _call(ctx, "/push", _word_payload(ctx, word))
    _emit(ctx, body, body["word"])


@main.command()
@click.argument("word", nargs=-1)
@click.pass_context
def forget(ctx: click.Context, word: tuple[str, ...]) -> None:
    """Forget the last marked point in a pure WORD."""
    body = _call(ctx, "/forget", _word_payload(ctx, word))
    _emit(ctx, body, body["word"])


@main.command()
@click.argument("word", nargs=-1)
@click.pass_context
def section(ctx: click.Context, word: tuple[str, ...]) -> None:
    """Reinterpret a pure WORD after adding a marked point."""
    body = _call(ctx, "/section", _word_payload(ctx, word))
    _emit(ctx, body, body["word"])


@main.command()
@click.argument("word", nargs=-1)
@click.pass_context
def perm(ctx: click.Context, word: tuple[str, ...]) -> None:
    """Permutation induced by WORD on the marked points."""
    body = _call(ctx, "/perm", _word_payload(ctx, word))
    _emit(ctx, body, body["cycles"])


@main.group()
def gamma() -> None:
    """Free-product arithmetic on cone generators."""


@gamma.command(name="nf")
@click.argument("text")
@click.pass_context
def gamma_nf(ctx: click.Context, text: str) -> None:
    """Normal form of a free-product element like g1^2*g2."""
    body = _call(ctx, "/gamma/nf", {"params": ctx.obj["params"], "text": text})
    _emit(ctx, body, body["text"])


@main.group()
def gpath() -> None:
    """Paths decorated with free-product translates."""


@gpath.command(name="normalize")
@click.argument("path")
@click.pass_context
def gpath_normalize(ctx: click.Context, path: str) -> None:
    """Continuous form of a decorated path like (g1; [g2]s1, e)."""
    body = _call(ctx, "/gpath/normalize", {"params": ctx.obj["params"], "path": path})
    _emit(ctx, body, body["continuous"])


@main.group()
def oracle() -> None:
    """Independent braid-strand oracle."""


@oracle.command(name="trivial")
@click.argument("word", nargs=-1)
@click.pass_context
def oracle_trivial(ctx: click.Context, word: tuple[str, ...]) -> None:
    """Oracle word problem for WORD; exit 0 if trivial, 1 if not."""
    body = _call(ctx, "/oracle/trivial", _word_payload(ctx, word))
    _emit(ctx, body, "trivial" if body["trivial"] else "nontrivial")
    sys.exit(0 if body["trivial"] else 1)


@main.command()
@click.option("--grid", is_flag=True, help="Sweep parameter tuples instead of the given ones.")
@click.option("--suite", "suites", multiple=True, help="Suite names; repeatable.")
@click.option("--max-n", type=int, default=4, show_default=True, help="Grid bound on n.")
@click.option("--max-punctures", type=int, default=2, show_default=True, help="Grid bound on L.")
@click.option("--max-cones", type=int, default=2, show_default=True, help="Grid bound on N.")
@click.option("--count", type=int, default=100, show_default=True, help="Samples per suite.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def verify(ctx: click.Context, grid: bool, suites: tuple[str, ...], max_n: int,
           max_punctures: int, max_cones: int, count: int, seed: int) -> None:
    """Run verification suites; exit 1 on any failure."""
    payload: dict[str, Any] = {
        "suites": list(suites) or None,
        "grid": grid,
        "max_n": max_n,
        "max_L": max_punctures,
        "max_N": max_cones,
        "count": count,
        "seed": seed,
    }
    if not grid:
        payload["params"] = ctx.obj["params"]
    body = _call(ctx, "/verify", payload)
    lines = []
    for rep in body["reports"]:
        mark = "pass" if rep["ok"] else "FAIL"
        p = rep["params"]
        line = (f"[{mark}] {rep['suite']} n={p['n']} L={p['L']} N={p['N']} "
                f"checked={rep['checked']} ({rep['seconds']:.2f}s)")
        if not rep["ok"]:
            line += f" failures={len(rep['failures'])}: {rep['failures'][0]}"
        lines.append(line)
    lines.append("ok" if body["ok"] else "FAILED")
    _emit(ctx, body, "\n".join(lines))
    sys.exit(0 if body["ok"] else 1)


@main.command()
@click.option("--count", type=int, default=50, show_default=True, help="Words to time.")
@click.option("--length", type=int, default=40, show_default=True, help="Letters per word.")
@click.option("--seed", type=int, default=0, show_default=True)
@click.pass_context
def bench(ctx: click.Context, count: int, length: int, seed: int) -> None:
    """Time normal_form on random words at the given parameters."""
    body = _call(ctx, "/bench", {
        "params": ctx.obj["params"], "count": count, "length": length, "seed": seed})
    _emit(ctx, body, body["line"])


@main.command()
@click.option("--host", default="127.0.0.1", show_default=True)
@click.option("--port", type=int, default=8000, show_default=True)
def serve(host: str, port: int) -> None:
    """Run the HTTP service."""
    import uvicorn

    from .service import create_app

    uvicorn.run(create_app(), host=host, port=port)


if __name__ == "__main__":
    main()
