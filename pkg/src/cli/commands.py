"""명령행 진입점

모든 결과는 표준 출력에 JSON 한 개로 씁니다. 종료 코드:
0 성공, 1 부정적 결과(동치 아님, 증명 불가, 검증 실패, 스위트 위반),
2 사용법/파싱/입력 조건, 3 모델의 부분성 오류.
"""

import argparse
import asyncio
import sys
from pathlib import Path
from typing import Callable, Dict, Optional, Sequence, Tuple

from pydantic import BaseModel, ValidationError

from src.analysis import Direction, b11_seq, e0_seq, e1_seq, e2_seq, real_embed
from src.automorph import almost_add_report, anchor_probes, apply, apply_inverse, validate
from src.cli.grammar import parse_element
from src.cli.sampler import ElementSampler, SampleProfile
from src.cli.schemas import (
    AlmostAddOutput,
    ApplyOutput,
    AutoOutput,
    CmpOutput,
    DivmodOutput,
    ElementOutput,
    EmbedOutput,
    ErrorOutput,
    SequenceOutput,
    ValidationOutput,
    VerdictSchema,
    dump_descriptor,
    read_descriptor_document,
)
from src.cli.suites import ALL, SUITES, resolve
from src.cli.workflows import run_suite
from src.core.config import settings
from src.core.exceptions import ModelArithmeticError
from src.equivalence import EquivLevel, decide, holds
from src.equivalence.prover import prove_E5
from src.series import ModelConfig, add, cmp, divmod, mul, pow, root_floor, sub
from src.shared.logger import get_logger

logger = get_logger(__name__)

Outcome = Tuple[BaseModel, int]

_SEQUENCES: Dict[str, Callable] = {"e0": e0_seq, "e1": e1_seq, "e2": e2_seq}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="nsarith", description="exact arithmetic in a computable nonstandard model"
    )
    parser.add_argument("--dim", type=int, choices=(1, 2), default=settings.MODEL_DIM)
    parser.add_argument("--div-budget", type=int, default=settings.DIV_BUDGET)
    parser.add_argument("--seed", type=int, default=settings.SEED)
    parser.add_argument("--pretty", action="store_true", help="indent the JSON output")
    commands = parser.add_subparsers(dest="command", required=True)

    p = commands.add_parser("eval", help="parse and print an element")
    p.add_argument("expr")

    p = commands.add_parser("cmp", help="compare two elements")
    p.add_argument("a")
    p.add_argument("b")

    arith = commands.add_parser("arith", help="semiring operations")
    ops = arith.add_subparsers(dest="op", required=True)
    for name in ("add", "mul", "sub", "divmod"):
        p = ops.add_parser(name)
        p.add_argument("a")
        p.add_argument("b")
    for name in ("pow", "root"):
        p = ops.add_parser(name)
        p.add_argument("a")
        p.add_argument("k", type=int)

    p = commands.add_parser("equiv", help="decide E^level with a witness")
    p.add_argument("--level", type=int, choices=range(5), required=True)
    p.add_argument("a")
    p.add_argument("b")

    p = commands.add_parser("auto", help="build an automorphism mapping a to b")
    p.add_argument("--from", dest="source", required=True)
    p.add_argument("--to", dest="target", required=True)
    p.add_argument("--probes", type=int, default=0, help="extra seeded probes")

    p = commands.add_parser("apply", help="apply a saved descriptor")
    p.add_argument("--desc", type=Path, required=True)
    p.add_argument("--inverse", action="store_true")
    p.add_argument("x")

    p = commands.add_parser("seq", help="class boundary sequences")
    p.add_argument("kind", choices=("e0", "e1", "e2", "b11"))
    p.add_argument("a")
    p.add_argument("--k", type=int, default=5)
    p.add_argument("--direction", choices=[d.value for d in Direction], default="up")

    p = commands.add_parser("embed", help="embed E3-classes of an E4-class into Q")
    p.add_argument("--anchor", required=True)
    p.add_argument("b")

    p = commands.add_parser("suite", help="run property suites")
    p.add_argument("--name", choices=[*SUITES, ALL], default=ALL)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--probes", type=int, default=None, help="random probes per automorphism")
    p.add_argument("--seed", type=int, default=argparse.SUPPRESS)
    p.add_argument("--dim", type=int, choices=(1, 2), default=argparse.SUPPRESS)

    return parser


def _eval(args, config: ModelConfig) -> Outcome:
    return ElementOutput.of(parse_element(args.expr, config.dim)), 0


def _cmp(args, config: ModelConfig) -> Outcome:
    ordering = cmp(parse_element(args.a, config.dim), parse_element(args.b, config.dim))
    return CmpOutput(ordering=ordering.value), 0


def _arith(args, config: ModelConfig) -> Outcome:
    a = parse_element(args.a, config.dim)
    if args.op == "pow":
        return ElementOutput.of(pow(a, args.k)), 0
    if args.op == "root":
        return ElementOutput.of(root_floor(a, args.k, config)), 0
    b = parse_element(args.b, config.dim)
    if args.op == "divmod":
        q, r = divmod(a, b, config)
        return DivmodOutput(q=ElementOutput.of(q), r=ElementOutput.of(r)), 0
    operation = {"add": add, "mul": mul, "sub": sub}[args.op]
    return ElementOutput.of(operation(a, b)), 0


def _equiv(args, config: ModelConfig) -> Outcome:
    a, b = parse_element(args.a, config.dim), parse_element(args.b, config.dim)
    verdict = decide(EquivLevel(args.level), a, b, config)
    return VerdictSchema.from_verdict(verdict), 0 if verdict.equivalent else 1


def _auto(args, config: ModelConfig) -> Outcome:
    a, b = parse_element(args.source, config.dim), parse_element(args.target, config.dim)
    descriptor = prove_E5(a, b, config)

    probes = set(anchor_probes([a, b]))
    if args.probes > 0:
        sampler = ElementSampler(SampleProfile(dim=config.dim, seed=f"{config.seed}:auto"))
        probes.update(sampler.element() for _ in range(args.probes))
    report = validate(descriptor, sorted(probes))

    output = AutoOutput(
        dim=config.dim,
        route="e2" if holds(EquivLevel.E2, a, b) else "e3",
        descriptor=dump_descriptor(descriptor),
        validation=ValidationOutput.of(report),
        almost_add=AlmostAddOutput.of(almost_add_report(descriptor, [a, b])),
    )
    return output, 0


def _apply(args, config: ModelConfig) -> Outcome:
    descriptor, dim = read_descriptor_document(args.desc.read_text(encoding="utf-8"))
    x = parse_element(args.x, dim)
    image = apply_inverse(descriptor, x) if args.inverse else apply(descriptor, x)
    return ApplyOutput(x=ElementOutput.of(x), image=ElementOutput.of(image)), 0


def _seq(args, config: ModelConfig) -> Outcome:
    a = parse_element(args.a, config.dim)
    direction = Direction(args.direction)
    if args.kind == "b11":
        sequence = b11_seq(a, args.k, direction, config)
    else:
        sequence = _SEQUENCES[args.kind](a, args.k, direction)
    return SequenceOutput.of(sequence), 0


def _embed(args, config: ModelConfig) -> Outcome:
    anchor = parse_element(args.anchor, config.dim)
    b = parse_element(args.b, config.dim)
    return EmbedOutput.of(real_embed(anchor, b)), 0


def _suite(args, config: ModelConfig) -> Outcome:
    report = asyncio.run(
        run_suite(
            resolve(args.name),
            samples=args.samples,
            seed=config.seed,
            dim=config.dim,
            div_budget=config.div_budget,
            validation_probes=args.probes,
        )
    )
    return report, 0 if report.passed else 1


_HANDLERS: Dict[str, Callable[..., Outcome]] = {
    "eval": _eval,
    "cmp": _cmp,
    "arith": _arith,
    "equiv": _equiv,
    "auto": _auto,
    "apply": _apply,
    "seq": _seq,
    "embed": _embed,
    "suite": _suite,
}


def _emit(model: BaseModel, pretty: bool) -> None:
    sys.stdout.write(model.model_dump_json(by_alias=True, indent=2 if pretty else None))
    sys.stdout.write("\n")


def _error(code: str, message: str, details: Optional[dict] = None) -> ErrorOutput:
    return ErrorOutput(
        error=code,
        message=message,
        details={key: str(value) for key, value in (details or {}).items()},
    )


def run(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        config = ModelConfig.from_settings(
            dim=args.dim, div_budget=args.div_budget, seed=args.seed
        )
        output, exit_code = _HANDLERS[args.command](args, config)
    except ModelArithmeticError as e:
        logger.info(f"{args.command} 실패: {e.code}: {e.message}")
        _emit(_error(e.code, e.message, e.details), args.pretty)
        return e.exit_code
    except ValidationError as e:
        _emit(_error("invalid_input", str(e)), args.pretty)
        return 2
    except (OSError, ValueError) as e:
        _emit(_error("usage_error", str(e)), args.pretty)
        return 2
    _emit(output, args.pretty)
    return exit_code


def main() -> int:
    try:
        return run()
    except KeyboardInterrupt:
        return 130
