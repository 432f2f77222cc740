"""
CSV, Markdown and JSON renderings of growth results
"""
import csv
import io
import json
from decimal import Decimal, ROUND_DOWN, localcontext
from fractions import Fraction
from typing import List, Sequence, Union

from .models import DensityPoint, GrowthSeries, TableRow


def truncate(value: Union[Decimal, Fraction], decimals: int) -> Decimal:
    """Round toward zero, so a lower bound stays a lower bound."""
    if isinstance(value, Fraction):
        with localcontext() as ctx:
            ctx.prec = decimals + 30
            value = Decimal(value.numerator) / Decimal(value.denominator)
    return value.quantize(Decimal(1).scaleb(-decimals), rounding=ROUND_DOWN)


def render_csv(data: Union[GrowthSeries, Sequence[DensityPoint]]) -> str:
    out = io.StringIO()
    writer = csv.writer(out, lineterminator="\n")
    if isinstance(data, GrowthSeries):
        writer.writerow(["length", "count"])
        for length in sorted(data.counts):
            writer.writerow([length, data.counts[length]])
    else:
        writer.writerow(["length", "numerator", "denominator", "value", "approx"])
        for point in data:
            writer.writerow([point.length, point.numerator, point.denominator, str(point.value),
                             f"{float(point.value):.6f}"])
    return out.getvalue()


def ascending_figure(row: TableRow) -> Decimal:
    """The zeta-ascending root rounded to thousandths."""
    return (row.ascending_root or row.pp_lower_bound).value.quantize(Decimal("0.001"))


def render_markdown_table(rows: Sequence[TableRow], decimals: int = 3) -> str:
    """
    rank | positive | potentially positive (lower bound) | all | zeta ascending

    The last column is rounded to thousandths; it is a reference figure, not a bound.
    """
    lines = [
        "| rank | positive | p.pos (lower bound) | all | zeta ascending |",
        "|---:|---:|---:|---:|---:|",
    ]
    for row in rows:
        bound = truncate(row.pp_lower_bound.lower, decimals)
        ascending = ascending_figure(row)
        lines.append(f"| {row.rank} | {row.positive_rate} | {bound} | {row.all_rate} | {ascending} |")
    return "\n".join(lines) + "\n"


def render_json(items: Union[List, object]) -> str:
    """JSON for one pydantic model or a list of them."""
    if isinstance(items, list):
        return "[" + ", ".join(item.json() for item in items) + "]"
    return items.json()


def dumps(data) -> str:
    return json.dumps(data, indent=2, sort_keys=True, default=str)
