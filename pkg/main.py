# --- LOGGING GLOBAL (colocar antes de qualquer outro import) ---
import logging
import sys

if hasattr(sys.stdout, "reconfigure"):
    sys.stdout.reconfigure(encoding="utf-8", errors="replace", line_buffering=True)
if hasattr(sys.stderr, "reconfigure"):
    sys.stderr.reconfigure(encoding="utf-8", errors="replace", line_buffering=True)


class ColorFormatter(logging.Formatter):
    COLORS = {
        "DEBUG": "\033[37m",  # cinza
        "INFO": "\033[36m",  # ciano
        "WARNING": "\033[33m",  # amarelo
        "ERROR": "\033[31m",  # vermelho
        "CRITICAL": "\033[41m",  # vermelho fundo
    }
    RESET = "\033[0m"

    def format(self, record):
        color = self.COLORS.get(record.levelname, self.RESET)
        message = super().format(record)
        return f"{color}{message}{self.RESET}"


def configurar_logging(verbose: bool = False) -> None:
    # relatórios vão para stdout; diagnósticos só para stderr
    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(ColorFormatter("%(asctime)s [%(levelname)s] [%(name)s] %(message)s"))
    nivel = "DEBUG" if verbose else os.getenv("MONOCHROME_LOG_LEVEL", "INFO").upper()
    logging.basicConfig(level=getattr(logging, nivel, logging.INFO), handlers=[handler], force=True)


import argparse
import json
import os
from datetime import datetime
from pathlib import Path
from typing import Any, Callable, Dict, List, Optional, Sequence

import pytz
import sentry_sdk
from dotenv import load_dotenv

from relatorio import RelatorioExperimentos, fuso_relatorio, payload_frame
from services.cnf import cnf_export, cnf_model_decode, parse_model
from services.coloring import (
    Coloring,
    dumps_coloring,
    load_coloring,
    parity_coloring,
    random_coloring,
    store_coloring,
)
from services.errors import (
    BudgetExceeded,
    CnfModelError,
    InvalidParams,
    MonochromeError,
    NotDivisible,
    ParseError,
    PoolExhausted,
)
from services.halesjewett import (
    PhjPoint,
    WildcardSet,
    coefficient_alphabet,
    hj_number_exhaustive,
    multiplicative_assignment,
    sigma_embed,
    sigma_pullback_search,
    verify_sigma_line_identity,
)
from services.largeness import (
    dilate_set,
    dilation_transport,
    divide_set,
    division_transport,
    ipstar_refute,
    make_witness,
    parse_element_set,
    ps_witness_search,
    ps_witness_violation,
    shift_set,
    split_top_level,
    syndetic_check,
)
from services.patterns import (
    PolyFamily,
    ScanConstraints,
    abundance_sweep,
    dilated_witness_family,
    parse_poly_family,
    recurrence_set,
    witness_scan,
)
from services.ring_core import (
    RingElement,
    RingSpec,
    Window,
    format_element,
    parse_element,
    parse_ring_spec,
    window_enumerate,
)
from services.run_config import FORMATS, RunConfig, load_run_config
from services.search import AvoidanceStatus, avoidance_backtrack, build_instance, moreira_number
from services.ufp import block_products, exclusion_set, grow_ufp, has_ufp
from services.workers import default_jobs

logger = logging.getLogger("monochrome")

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_USAGE = 2


class Resultado:
    """Payload de um subcomando e o código de saída correspondente."""

    def __init__(self, payload: Any, exit_status: int = EXIT_OK):
        self.payload = payload
        self.exit_status = exit_status


# ============================================================
# OBSERVABILIDADE
# ============================================================

def configurar_sentry() -> None:
    dsn = os.getenv("SENTRY_DSN")
    if not dsn:
        return
    sentry_sdk.init(
        dsn=dsn,
        send_default_pii=False,  # 🔒 não enviar PII por padrão
        traces_sample_rate=0.0,
    )
    logger.debug("[sentry] inicializado")


# ============================================================
# ENTRADAS COMUNS
# ============================================================

def _config(args: argparse.Namespace) -> RunConfig:
    base = load_run_config(args.config) if getattr(args, "config", None) else RunConfig()
    flags = {
        "ring": args.ring,
        "window": args.window,
        "colors": args.colors,
        "F": args.F,
        "exclude_y": args.exclude_y,
        "exclude_x": args.exclude_x,
        "require_in_window": args.require_in_window,
        "forbid_degenerate": args.forbid_degenerate,
        "seed": args.seed,
        "budget": args.budget,
        "format": args.format,
        "jobs": args.jobs,
        "coloring": args.coloring,
    }
    return base.merged(flags)


def _required(value: Optional[Any], flag: str) -> Any:
    if value is None:
        raise ParseError(f"faltou {flag}", flag)
    return value


def _spec(cfg: RunConfig) -> RingSpec:
    return parse_ring_spec(cfg.ring or "Z")


def _window(cfg: RunConfig) -> Window:
    return window_enumerate(_spec(cfg), _required(cfg.window, "--window"))


def _family(cfg: RunConfig) -> PolyFamily:
    return parse_poly_family(_spec(cfg), _required(cfg.F, "--F"))


def _jobs(cfg: RunConfig) -> int:
    return cfg.jobs if cfg.jobs is not None else default_jobs()


def _literals(text: Optional[str]) -> List[str]:
    if not text:
        return []
    body = text.strip()
    if body.startswith("{") and body.endswith("}"):
        body = body[1:-1]
    return split_top_level(body)


def _elements(spec: RingSpec, text: Optional[str]) -> List[RingElement]:
    return [parse_element(spec, tok) for tok in _literals(text)]


def _constraints(cfg: RunConfig) -> ScanConstraints:
    defaults = ScanConstraints()
    return ScanConstraints(
        exclude_y=frozenset(_literals(cfg.exclude_y)) if cfg.exclude_y is not None else defaults.exclude_y,
        exclude_x=frozenset(_literals(cfg.exclude_x)) if cfg.exclude_x is not None else defaults.exclude_x,
        require_in_window=defaults.require_in_window if cfg.require_in_window is None else cfg.require_in_window,
        forbid_degenerate=defaults.forbid_degenerate if cfg.forbid_degenerate is None else cfg.forbid_degenerate,
    )


def _coloring(cfg: RunConfig) -> Coloring:
    if cfg.coloring:
        c = load_coloring(cfg.coloring)
        if cfg.ring and parse_ring_spec(cfg.ring) != c.window.spec:
            raise InvalidParams(f"arquivo de coloração é sobre {c.window.spec}, não {cfg.ring}")
        return c
    colors = _required(cfg.colors, "--colors")
    return random_coloring(_window(cfg), colors, cfg.seed if cfg.seed is not None else 0)


def _ints(text: str, flag: str) -> List[int]:
    try:
        return [int(tok) for tok in _literals(text)]
    except ValueError:
        raise ParseError(f"{flag} espera inteiros separados por vírgula", text) from None


# ============================================================
# SUBCOMANDOS
# ============================================================

def cmd_scan(args, cfg: RunConfig) -> Resultado:
    c = _coloring(cfg)
    F = parse_poly_family(c.window.spec, _required(cfg.F, "--F"))
    found = [w.as_dict() for w in witness_scan(c, F, _constraints(cfg), limit=args.limit, jobs=_jobs(cfg))]
    return Resultado(found, EXIT_OK if found else EXIT_NEGATIVE)


def cmd_abundance(args, cfg: RunConfig) -> Resultado:
    c = _coloring(cfg)
    spec = c.window.spec
    F = parse_poly_family(spec, _required(cfg.F, "--F"))
    k = _constraints(cfg)
    if args.family is not None:
        z = parse_element(spec, args.family)
        fam = dilated_witness_family(c, F, z, _required(args.color, "--color"), k)
        payload = {
            "z": format_element(z),
            "color": fam.color,
            "members": [{"w": format_element(w), "x": format_element(x)} for w, x in fam.members],
        }
        return Resultado(payload, EXIT_OK if fam.members else EXIT_NEGATIVE)
    if args.recurrence is not None:
        rec = recurrence_set(c, F, args.recurrence, k)
        payload = [{"n": format_element(n), "a": format_element(a)} for n, a in rec.items()]
        return Resultado(payload, EXIT_OK if payload else EXIT_NEGATIVE)
    ys = _elements(spec, args.y) if args.y else None
    table = abundance_sweep(c, F, ys, k)
    return Resultado(table.to_dict(orient="records"))


def _witness_args(args, spec: RingSpec):
    return make_witness(
        _elements(spec, _required(args.G, "--G")),
        _elements(spec, _required(args.B, "--B")),
        parse_element(spec, _required(args.anchor, "--anchor")),
    )


def cmd_largeness(args, cfg: RunConfig) -> Resultado:
    window = _window(cfg)
    spec = window.spec
    A = parse_element_set(window, _required(args.A, "--A"))
    mode = args.modo

    if mode == "syndetic":
        res = syndetic_check(A, _elements(spec, _required(args.G, "--G")), window)
        payload = {"holds": res.holds}
        if res.counterexample is not None:
            payload["counterexample"] = format_element(res.counterexample)
        return Resultado(payload, EXIT_OK if res.holds else EXIT_NEGATIVE)

    if mode == "ps":
        G = _elements(spec, _required(args.G, "--G"))
        B = _elements(spec, _required(args.B, "--B"))
        if args.anchor is not None:
            w = make_witness(G, B, parse_element(spec, args.anchor))
            bad = ps_witness_violation(A, w)
            payload = {"valid": bad is None, "witness": w.as_dict()}
            if bad is not None:
                payload["failing_b"] = format_element(bad)
            return Resultado(payload, EXIT_OK if bad is None else EXIT_NEGATIVE)
        res = ps_witness_search(A, G, B, window, jobs=_jobs(cfg))
        payload = {"found": res.found, "witness": res.witness.as_dict() if res.witness else None}
        return Resultado(payload, EXIT_OK if res.found else EXIT_NEGATIVE)

    if mode == "ipstar":
        entries = _elements(spec, args.entries) if args.entries else None
        res = ipstar_refute(A, window, args.seq_len, args.samples, cfg.seed or 0, entries)
        payload = {
            "status": "counterexample" if res.found else "none_found",
            "samples_tried": res.samples_tried,
            "sequence": [format_element(e) for e in res.sequence] if res.sequence else None,
        }
        return Resultado(payload, EXIT_NEGATIVE if res.found else EXIT_OK)

    if mode == "transport":
        w = _witness_args(args, spec)
        if (args.dilate is None) == (args.divide is None):
            raise ParseError("informe exatamente um de --dilate / --divide", "transport")
        if args.dilate is not None:
            r = parse_element(spec, args.dilate)
            moved, target = dilation_transport(w, r), dilate_set(A, r)
            kind, by = "dilation", r
        else:
            y = parse_element(spec, args.divide)
            moved, target = division_transport(w, y, A), divide_set(A, y)
            kind, by = "division", y
        valid_before = ps_witness_violation(A, w) is None
        valid_after = ps_witness_violation(target, moved) is None
        payload = {
            "kind": kind,
            "by": format_element(by),
            "witness": w.as_dict(),
            "transported": moved.as_dict(),
            "valid_before": valid_before,
            "valid_after": valid_after,
        }
        return Resultado(payload, EXIT_OK if valid_after else EXIT_NEGATIVE)

    # shift
    P = _elements(spec, _required(args.P, "--P"))
    shifts = shift_set(A, P, window)
    return Resultado([format_element(s) for s in shifts], EXIT_OK if shifts else EXIT_NEGATIVE)


def cmd_hj(args, cfg: RunConfig) -> Resultado:
    res = hj_number_exhaustive(
        _required(cfg.colors, "--colors"), args.alphabet, args.maxN, cfg.effective_budget(), _jobs(cfg)
    )
    return Resultado(res.as_dict(), EXIT_OK if res.found else EXIT_NEGATIVE)


def _sigma_inputs(args, cfg: RunConfig):
    spec = _spec(cfg)
    F = parse_poly_family(spec, _required(cfg.F, "--F"))
    d = max(1, F.degree)
    ys = _elements(spec, _required(args.y, "--y"))
    if len(ys) != args.N:
        raise ParseError(f"--y precisa de {args.N} valores", args.y)
    r0 = parse_element(spec, args.r0)
    return spec, F, d, multiplicative_assignment(ys, d), r0


def cmd_sigma(args, cfg: RunConfig) -> Resultado:
    spec, F, d, y_assign, r0 = _sigma_inputs(args, cfg)
    N = args.N
    if args.pullback:
        c = _coloring(cfg)
        hit = sigma_pullback_search(c, F, N, y_assign, r0, cfg.effective_budget())
        if hit is None:
            return Resultado({"status": "not_found"}, EXIT_NEGATIVE)
        return Resultado({"status": "found", **hit.as_dict()})

    values = _elements(spec, _required(args.u, "--u"))
    sizes = [N ** j for j in range(1, d + 1)]
    if len(values) != sum(sizes):
        raise ParseError(f"--u precisa de {sum(sizes)} valores (N + N² + ... + N^d)", args.u)
    blocks, start = [], 0
    for j, size in enumerate(sizes, start=1):
        flat = values[start:start + size]
        start += size
        blocks.append(_nest(flat, N, j))
    u = PhjPoint.from_values(coefficient_alphabet(F), blocks)
    gamma = WildcardSet(frozenset(_ints(_required(args.gamma, "--gamma"), "--gamma")))
    report = verify_sigma_line_identity(F, N, y_assign, gamma, u, r0)
    payload = {"sigma_u": format_element(sigma_embed(F, N, y_assign, r0, u)), **report.as_dict()}
    return Resultado(payload, EXIT_OK if report.holds else EXIT_NEGATIVE)


def _nest(flat: Sequence[Any], N: int, j: int) -> Any:
    """Lista plana em ordem lexicográfica de [N]^j → listas aninhadas de profundidade j."""
    if j == 1:
        return list(flat)
    step = N ** (j - 1)
    return [_nest(flat[k * step:(k + 1) * step], N, j - 1) for k in range(N)]


def cmd_search(args, cfg: RunConfig) -> Resultado:
    F = _family(cfg)
    colors = _required(cfg.colors, "--colors")
    if args.modo == "moreira":
        res = moreira_number(
            colors, F, args.maxN, cfg.effective_budget(), _constraints(cfg), args.cross_check, _jobs(cfg)
        )
        ok = res.status == "found" and res.engines_agree is not False
        return Resultado(res.as_dict(), EXIT_OK if ok else EXIT_NEGATIVE)
    inst = build_instance(_window(cfg), colors, F, _constraints(cfg))
    res = avoidance_backtrack(inst, cfg.effective_budget(), _jobs(cfg))
    if res.coloring is not None and args.output:
        store_coloring(args.output, res.coloring)
    # forced também sai com 1
    ok = res.status is AvoidanceStatus.FOUND
    return Resultado(res.as_dict(), EXIT_OK if ok else EXIT_NEGATIVE)


def cmd_cnf(args, cfg: RunConfig) -> Resultado:
    inst = build_instance(_window(cfg), _required(cfg.colors, "--colors"), _family(cfg), _constraints(cfg))
    if args.modo == "export":
        doc = cnf_export(inst)
        text = doc.to_dimacs()
        payload = {"path": args.output, "vars": doc.num_vars, "clauses": doc.num_clauses, "candidates": len(inst.candidates)}
        if args.output:
            Path(args.output).write_text(text, encoding="utf-8", newline="\n")
        else:
            payload["dimacs"] = text
        return Resultado(payload)
    model = parse_model(Path(_required(args.model, "--model")).read_text(encoding="utf-8"))
    c = cnf_model_decode(model, inst)
    if args.output:
        store_coloring(args.output, c)
    return Resultado({"valid": True, "coloring": {format_element(e): k for e, k in zip(c.window, c.as_list())}})


def cmd_coloring(args, cfg: RunConfig) -> Resultado:
    window = _window(cfg)
    if args.parity:
        c = parity_coloring(window)
    else:
        c = random_coloring(window, _required(cfg.colors, "--colors"), cfg.seed if cfg.seed is not None else 0)
    payload = {"path": args.output, "ring": str(window.spec), "window": str(window.params), "colors": c.r}
    if args.output:
        store_coloring(args.output, c)
    else:
        payload["text"] = dumps_coloring(c)
    return Resultado(payload)


def cmd_ufp(args, cfg: RunConfig) -> Resultado:
    spec = _spec(cfg)
    mode = args.modo
    if mode == "verify":
        check = has_ufp(_elements(spec, _required(args.seq, "--seq")))
        return Resultado(check.as_dict(), EXIT_OK if check.holds else EXIT_NEGATIVE)
    if mode == "exclusion":
        C = exclusion_set(_elements(spec, args.B or "{}"), jobs=_jobs(cfg))
        return Resultado(sorted(format_element(x) for x in C))
    if mode == "blocks":
        seq = _elements(spec, _required(args.seq, "--seq"))
        res = block_products(seq, _ints(_required(args.cuts, "--cuts"), "--cuts"))
        return Resultado(res.as_dict(), EXIT_OK if res.injective else EXIT_NEGATIVE)
    start = parse_element(spec, _required(args.start, "--start"))
    seq = grow_ufp(start, _window(cfg), args.m)
    return Resultado(seq.as_list())


def cmd_report(args, cfg: RunConfig) -> Resultado:
    rel = RelatorioExperimentos.carregar(args.inputs)
    written = rel.salvar(args.out_dir)
    return Resultado({"tables": written, "summary": rel.resumo().to_dict(orient="records")})


COMMANDS: Dict[str, Callable[[argparse.Namespace, RunConfig], Resultado]] = {
    "scan": cmd_scan,
    "abundance": cmd_abundance,
    "largeness": cmd_largeness,
    "hj": cmd_hj,
    "sigma": cmd_sigma,
    "search": cmd_search,
    "cnf": cmd_cnf,
    "coloring": cmd_coloring,
    "ufp": cmd_ufp,
    "report": cmd_report,
}


# ============================================================
# PARSER
# ============================================================

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ParseError(message)


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--config", help="manifesto chave = valor")
    p.add_argument("--ring", help="Z, Zi ou GF(q)[x]")
    p.add_argument("--window", help="N=<int>[,signed], B=<int> ou d=<int>")
    p.add_argument("--colors", "-r", type=int)
    p.add_argument("--F", help='família em t separada por ";", ex.: "t; 0; 2t^2+t"')
    p.add_argument("--exclude-y", dest="exclude_y")
    p.add_argument("--exclude-x", dest="exclude_x")
    p.add_argument("--allow-out-of-window", dest="require_in_window", action="store_const", const=False)
    p.add_argument("--allow-degenerate", dest="forbid_degenerate", action="store_const", const=False)
    p.add_argument("--seed", type=int)
    p.add_argument("--budget", type=int)
    p.add_argument("--format", choices=FORMATS)
    p.add_argument("--jobs", type=int)
    p.add_argument("--coloring", help="arquivo de coloração (em vez de sortear)")
    p.add_argument("--verbose", "-v", action="store_true")
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = _Parser(prog="monochrome", description="Configurações monocromáticas {xy} ∪ {x+f(y)}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("scan", parents=[common])
    p.add_argument("--limit", type=int)

    p = sub.add_parser("abundance", parents=[common])
    p.add_argument("--y", help="lista de y (padrão: janela inteira)")
    p.add_argument("--family", help="z: família dilatada E = z·X_z^i")
    p.add_argument("--color", type=int)
    p.add_argument("--recurrence", type=int, metavar="COR")

    p = sub.add_parser("largeness", parents=[common])
    p.add_argument("modo", choices=["syndetic", "ps", "ipstar", "transport", "shift"])
    p.add_argument("--A", help="{..}, evens, odds, ideal(m) ou window")
    p.add_argument("--G")
    p.add_argument("--B")
    p.add_argument("--P")
    p.add_argument("--anchor")
    p.add_argument("--dilate")
    p.add_argument("--divide")
    p.add_argument("--seq-len", dest="seq_len", type=int, default=4)
    p.add_argument("--samples", type=int, default=200)
    p.add_argument("--entries")

    p = sub.add_parser("hj", parents=[common])
    p.add_argument("--alphabet", "-t", type=int, required=True)
    p.add_argument("--maxN", type=int, required=True)

    p = sub.add_parser("sigma", parents=[common])
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--y", help="y_1..y_N (produtos vêm por multiplicação)")
    p.add_argument("--gamma")
    p.add_argument("--u", help="coordenadas de u, blocos j=1..d em ordem lexicográfica")
    p.add_argument("--r0", default="0")
    p.add_argument("--pullback", action="store_true")

    p = sub.add_parser("search", parents=[common])
    p.add_argument("modo", choices=["avoid", "moreira"])
    p.add_argument("--maxN", type=int, default=64)
    p.add_argument("--cross-check", dest="cross_check", action="store_true")
    p.add_argument("--output", "-o")

    p = sub.add_parser("cnf", parents=[common])
    p.add_argument("modo", choices=["export", "decode"])
    p.add_argument("--model")
    p.add_argument("--output", "-o")

    p = sub.add_parser("coloring", parents=[common])
    p.add_argument("modo", choices=["generate"])
    p.add_argument("--parity", action="store_true")
    p.add_argument("--output", "-o")

    p = sub.add_parser("ufp", parents=[common])
    p.add_argument("modo", choices=["verify", "grow", "exclusion", "blocks"])
    p.add_argument("--seq")
    p.add_argument("--B")
    p.add_argument("--cuts")
    p.add_argument("--start")
    p.add_argument("--m", type=int, default=10)

    p = sub.add_parser("report", parents=[common])
    p.add_argument("inputs", nargs="+")
    p.add_argument("--out-dir", dest="out_dir", default="relatorios")
    return parser


# ============================================================
# SAÍDA
# ============================================================

def montar_relatorio(command: str, argv: Sequence[str], resultado: Resultado) -> Dict[str, Any]:
    return {
        "command": command,
        "argv": list(argv),
        "timestamp": datetime.now(pytz.utc).astimezone(fuso_relatorio()).isoformat(),
        "exit_status": resultado.exit_status,
        "payload": resultado.payload,
    }


def renderizar(relatorio: Dict[str, Any], formato: str) -> str:
    if formato == "csv":
        return payload_frame(relatorio["payload"]).to_csv(index=False, lineterminator="\n")
    if formato == "text":
        linhas = [f"# {relatorio['command']} ({relatorio['timestamp']}) -> {relatorio['exit_status']}"]
        payload = relatorio["payload"]
        if isinstance(payload, dict):
            linhas += [f"{k}: {json.dumps(v, ensure_ascii=False)}" for k, v in payload.items()]
        elif isinstance(payload, list):
            linhas += [json.dumps(item, ensure_ascii=False) for item in payload]
        else:
            linhas.append(json.dumps(payload, ensure_ascii=False))
        return "\n".join(linhas) + "\n"
    return json.dumps(relatorio, ensure_ascii=False, indent=2) + "\n"


def run(argv: Optional[Sequence[str]] = None, stdout=None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    out = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
    except ParseError as exc:
        logger.error(f"[cli] uso inválido: {exc}")
        return EXIT_USAGE
    except SystemExit as exc:
        return int(exc.code or 0)
    if args.verbose:
        logging.getLogger().setLevel(logging.DEBUG)

    try:
        cfg = _config(args)
        resultado = COMMANDS[args.command](args, cfg)
    except (ParseError, InvalidParams) as exc:
        logger.error(f"[cli] {exc}")
        return EXIT_USAGE
    except (BudgetExceeded, PoolExhausted, NotDivisible, CnfModelError) as exc:
        logger.error(f"[cli] {type(exc).__name__}: {exc}")
        return EXIT_NEGATIVE
    except (MonochromeError, OSError) as exc:
        logger.error(f"[cli] {type(exc).__name__}: {exc}")
        return EXIT_USAGE
    except Exception as exc:  # noqa: BLE001
        logger.exception(f"[cli] erro inesperado em {args.command}: {exc}")
        sentry_sdk.capture_exception(exc)
        return EXIT_USAGE

    relatorio = montar_relatorio(args.command, argv, resultado)
    out.write(renderizar(relatorio, cfg.effective_format()))
    return resultado.exit_status


def main() -> None:
    load_dotenv()
    configurar_logging("--verbose" in sys.argv or "-v" in sys.argv)
    configurar_sentry()
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
