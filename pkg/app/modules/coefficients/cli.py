import argparse
from typing import Optional, Tuple

from app.cli_types import nonnegative_int
from app.config import settings
from app.modules.kernels.models import TriangleKind
from app.modules.kernels.service import inject_fault
from .models import REFERENCE_FORMULA, FormulaName
from .schemas import (
    OutputFormat,
    format_decimal,
    format_fraction,
    render_json,
    render_table_csv,
    report_rows,
    single_row,
    summary_row,
)
from .service import CoefficientService

FORMULA_CHOICES = [name.value for name in FormulaName] + ["bm", "all"]

_FAULT_KINDS = {
    "s2": TriangleKind.SECOND_KIND,
    "s3": TriangleKind.ASSOC3_SECOND_KIND,
    "d3": TriangleKind.ASSOC3_FIRST_KIND,
}

Fault = Tuple[TriangleKind, int, int, int]


def parse_fault(text: str) -> Fault:
    """KIND,P,Q,VALUE -> подмена одного элемента треугольника"""
    parts = [part.strip() for part in text.split(",")]
    if len(parts) != 4:
        raise argparse.ArgumentTypeError(f"expected KIND,P,Q,VALUE, got {text!r}")
    kind_name, p, q, value = parts
    try:
        kind = _FAULT_KINDS.get(kind_name.lower()) or TriangleKind(kind_name.lower())
        row, column, entry = int(p), int(q), int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"invalid fault description {text!r}")
    if not 0 <= column <= row:
        raise argparse.ArgumentTypeError(
            f"fault entry ({row},{column}) lies outside the triangle 0 <= q <= p"
        )
    return kind, row, column, entry


def _render_value(value, output: OutputFormat) -> str:
    if output.kind == "decimal":
        return format_decimal(value, output.digits)
    return format_fraction(value)


def cmd_coeff(k: int, formula: str, fmt: str) -> str:
    """a_k по выбранной формуле или отчет по всем формулам"""
    digits = settings.coefficients.decimal_digits
    output = OutputFormat.parse(fmt, digits)
    service = CoefficientService()

    if formula == "all":
        report = service.report(k)
        if output.kind == "json":
            rows = report_rows(report, digits)
            return render_json([row.model_dump() for row in rows])
        lines = [
            f"{name.value}: {_render_value(value, output)}"
            for name, value in report.values.items()
        ]
        lines.append(f"agree: {'true' if report.agree else 'false'}")
        return "\n".join(lines)

    name = FormulaName.parse(formula)
    value = service.compute(name, k)
    if output.kind == "json":
        reference = value
        if name != REFERENCE_FORMULA:
            reference = service.compute(REFERENCE_FORMULA, k)
        return render_json(single_row(k, name, value, reference, digits).model_dump())
    return _render_value(value, output)


def cmd_table(k_max: int, fmt: str) -> str:
    """Таблица a_0..a_{k_max} с флагом согласия формул"""
    digits = settings.coefficients.decimal_digits
    reports = CoefficientService().verify_all(k_max)
    rows = [summary_row(report, digits) for report in reports]

    kind = fmt.strip().lower()
    if kind == "csv":
        return render_table_csv(rows)
    if kind == "json":
        return render_json([row.model_dump() for row in rows])
    raise ValueError(f"Unknown table format: {fmt!r}")


def cmd_verify(k_max: int, fault: Optional[Fault] = None) -> int:
    """Проверка совпадения всех формул; 0 - совпали, 1 - есть расхождение"""
    service = CoefficientService()
    if fault is not None:
        with inject_fault(*fault):
            reports = service.verify_all(k_max)
    else:
        reports = service.verify_all(k_max)

    for report in reports:
        if report.agree:
            continue
        for name in report.disagreeing():
            print(
                f"MISMATCH at k={report.k}: {name.value}="
                f"{format_fraction(report.values[name])} differs from "
                f"{REFERENCE_FORMULA.value}={format_fraction(report.reference)}"
            )
        return 1

    print(f"OK: a_0..a_{k_max} agree across {len(service.formula_names)} formulas")
    return 0


def _handle_coeff(args: argparse.Namespace) -> int:
    print(cmd_coeff(args.k, args.formula, args.format))
    return 0


def _handle_table(args: argparse.Namespace) -> int:
    print(cmd_table(args.k_max, args.format), end="" if args.format == "csv" else "\n")
    return 0


def _handle_verify(args: argparse.Namespace) -> int:
    return cmd_verify(args.k_max, args.inject_fault)


def register(subparsers) -> None:
    """Регистрирует команды coeff, table и verify"""
    coeff = subparsers.add_parser("coeff", help="Коэффициент a_k по выбранной формуле")
    coeff.add_argument("k", type=nonnegative_int)
    coeff.add_argument("--formula", choices=FORMULA_CHOICES, default="recurrence")
    coeff.add_argument(
        "--format", default="fraction", help="fraction | decimal[:P] | json"
    )
    coeff.set_defaults(handler=_handle_coeff)

    table = subparsers.add_parser("table", help="Таблица a_0..a_K")
    table.add_argument(
        "k_max",
        type=nonnegative_int,
        nargs="?",
        default=settings.coefficients.default_k_max,
    )
    table.add_argument("--format", choices=["csv", "json"], default="csv")
    table.set_defaults(handler=_handle_table)

    verify = subparsers.add_parser("verify", help="Перекрестная проверка формул")
    verify.add_argument(
        "k_max",
        type=nonnegative_int,
        nargs="?",
        default=settings.coefficients.default_k_max,
    )
    verify.add_argument(
        "--inject-fault",
        type=parse_fault,
        default=None,
        metavar="KIND,P,Q,VALUE",
        help="Подменить один элемент треугольника (s2, s3, d3)",
    )
    verify.set_defaults(handler=_handle_verify)
