"""
@file: app.py
@description: Командная строка MutVis: gen, construct, verify, solve, bounds, bypass
@dependencies: argparse, structlog, pydantic, core.services, solver, bounds
@created: 2026-10-18
"""

import argparse
import json
import sys
from typing import Callable, Dict, List, Optional, TextIO

import structlog
from pydantic import ValidationError

from ..bounds import bounds_for, report_row, rows_to_csv, hypercube_table_rows
from ..constructions import CONSTRUCTIONS
from ..core.config import constants, get_settings
from ..core.errors import InvalidArgumentError, MutvisError
from ..core.graph import Graph
from ..core.graph_io import dump_graph_json, graph_to_dot, read_graph
from ..core.logging_config import configure_logging
from ..core.services.certificate_service import certificate_service
from ..core.visibility import bypass_vertices
from ..schemas.certificate import SetKind
from ..schemas.reports import BypassSummary, SolveOptions
from ..schemas.topology import TopologyKind, TopologySpec
from ..solver import solve
from ..topologies import build_topology

logger = structlog.get_logger(__name__)

KINDS = [kind.value for kind in TopologyKind]


def parse_dimensions(text: str) -> List[int]:
    """Размерность вида 5 или диапазон вида 1..5"""
    if ".." in text:
        first, _, last = text.partition("..")
        start, stop = int(first), int(last)
        if start > stop:
            raise InvalidArgumentError(f"empty dimension range {text!r}")
        return list(range(start, stop + 1))
    return [int(text)]


class MutvisCli:
    """Разбор аргументов и выполнение команд"""

    def __init__(self, stdout: Optional[TextIO] = None, stderr: Optional[TextIO] = None):
        self.stdout = stdout or sys.stdout
        self.stderr = stderr or sys.stderr
        self.handlers: Dict[str, Callable[[argparse.Namespace], int]] = {}
        self.parser = self._build_parser()

    def _build_parser(self) -> argparse.ArgumentParser:
        settings = get_settings()
        parser = argparse.ArgumentParser(
            prog="mutvis",
            description="Mutual-visibility sets in hypercubes, cube-connected cycles and butterflies",
        )
        parser.add_argument("--log-level", default=settings.log_level, help="Уровень логирования (stderr)")
        parser.add_argument("--json-logs", action="store_true", default=settings.log_json, help="JSON-логи")
        sub = parser.add_subparsers(dest="command", required=True)

        gen = sub.add_parser(constants.COMMAND_GEN, help="Сгенерировать граф")
        self._add_topology(gen)
        gen.add_argument("-o", "--out", help="Файл результата (по умолчанию stdout)")
        gen.add_argument("--format", choices=["json", "dot"], default="json")

        construct = sub.add_parser(constants.COMMAND_CONSTRUCT, help="Построить сертификат конструкции")
        construct.add_argument("name", choices=sorted(CONSTRUCTIONS))
        construct.add_argument("d", type=int)
        construct.add_argument("-o", "--out", help="Файл сертификата (по умолчанию stdout)")
        construct.add_argument("--verify", action="store_true", help="Проверить чекером перед записью")

        verify = sub.add_parser(constants.COMMAND_VERIFY, help="Проверить сертификат")
        verify.add_argument("certificate")
        verify.add_argument("--write-back", action="store_true", help="Записать статус в файл")

        solve_parser = sub.add_parser(constants.COMMAND_SOLVE, help="Точный mu(G) или mu_t(G)")
        self._add_topology(solve_parser, optional=True)
        solve_parser.add_argument("--total", action="store_true", help="Искать mu_t")
        solve_parser.add_argument("--budget", type=int, default=settings.default_node_budget, help="Лимит узлов")
        solve_parser.add_argument("--time-budget", type=float, default=settings.default_time_budget, help="Лимит времени, с")
        solve_parser.add_argument("--seed-lower-bound", type=int, help="Известная нижняя оценка")
        solve_parser.add_argument("--symmetry", action="store_true", help="Фиксировать вершину 0 (Q_d, CCC_d)")
        solve_parser.add_argument("--column-cap", type=int, help="Не больше cap вершин в столбце бабочки")
        solve_parser.add_argument("--workers", type=int, help="Число потоков (по умолчанию MUTVIS_THREADS)")

        bounds = sub.add_parser(constants.COMMAND_BOUNDS, help="Оценки mu и mu_t")
        bounds.add_argument("kind", choices=KINDS)
        bounds.add_argument("d", help="Размерность или диапазон a..b")
        bounds.add_argument("--csv", action="store_true", help="CSV вместо JSON")

        bypass = sub.add_parser(constants.COMMAND_BYPASS, help="Bypass-вершины и вердикт mu_t = 0")
        self._add_topology(bypass, optional=True)

        self.handlers = {
            constants.COMMAND_GEN: self._gen_command,
            constants.COMMAND_CONSTRUCT: self._construct_command,
            constants.COMMAND_VERIFY: self._verify_command,
            constants.COMMAND_SOLVE: self._solve_command,
            constants.COMMAND_BOUNDS: self._bounds_command,
            constants.COMMAND_BYPASS: self._bypass_command,
        }
        return parser

    @staticmethod
    def _add_topology(parser: argparse.ArgumentParser, optional: bool = False) -> None:
        nargs = "?" if optional else None
        parser.add_argument("kind", choices=KINDS, nargs=nargs)
        parser.add_argument("d", type=int, nargs=nargs)
        if optional:
            parser.add_argument("--graph", help="JSON-файл произвольного графа")

    def run(self, argv: Optional[List[str]] = None) -> int:
        """Выполнить команду и вернуть код выхода 0/1/2"""
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as e:
            return constants.EXIT_OK if e.code in (0, None) else constants.EXIT_ERROR

        configure_logging(args.log_level, args.json_logs)
        logger.debug("command dispatched", command=args.command)
        try:
            return self.handlers[args.command](args)
        except ValidationError as e:
            return self._fail(e.errors()[0]["msg"])
        except (MutvisError, OSError, ValueError) as e:
            return self._fail(str(e))

    # Вывод

    def _emit(self, text: str) -> None:
        self.stdout.write(text.rstrip("\n") + "\n")

    def _fail(self, message: str) -> int:
        logger.error("command failed", error=message)
        self.stderr.write(f"mutvis: error: {message}\n")
        return constants.EXIT_ERROR

    def _graph(self, args: argparse.Namespace) -> Graph:
        """Граф из позиционных kind d или из --graph"""
        if getattr(args, "graph", None):
            if args.kind is not None:
                raise InvalidArgumentError("give either kind and d or --graph, not both")
            return read_graph(args.graph)
        if args.kind is None or args.d is None:
            raise InvalidArgumentError("kind and d are required without --graph")
        return build_topology(TopologySpec(kind=args.kind, d=args.d))

    # Команды

    def _gen_command(self, args: argparse.Namespace) -> int:
        """Обработка команды gen"""
        graph = self._graph(args)
        text = graph_to_dot(graph, str(graph.topology)) if args.format == "dot" else dump_graph_json(graph)
        if args.out:
            with open(args.out, "w", encoding="utf-8") as handle:
                handle.write(text.rstrip("\n") + "\n")
            self._emit(json.dumps({"written": args.out, "n": graph.vertex_count, "edges": graph.edge_count}))
        else:
            self._emit(text)
        return constants.EXIT_OK

    def _construct_command(self, args: argparse.Namespace) -> int:
        """Обработка команды construct"""
        certificate = certificate_service.build(args.name, args.d, verify=args.verify)
        document = certificate_service.to_file(certificate)
        if args.out:
            certificate_service.write(document, args.out)
            self._emit(json.dumps({"written": args.out, "claimed_size": document.claimed_size}))
        else:
            self._emit(certificate_service.dumps(document))
        return constants.EXIT_OK

    def _verify_command(self, args: argparse.Namespace) -> int:
        """Обработка команды verify: 0 - валиден, 1 - невалиден"""
        document = certificate_service.read(args.certificate)
        updated, outcome = certificate_service.verify_file(document)
        if args.write_back:
            certificate_service.write(updated, args.certificate)
        self._emit(outcome.model_dump_json())
        if not outcome.valid:
            u, v = outcome.failing_pair
            self.stderr.write(f"mutvis: invalid: {u} and {v} are not mutually visible\n")
            return constants.EXIT_INVALID
        return constants.EXIT_OK

    def _solve_command(self, args: argparse.Namespace) -> int:
        """Обработка команды solve; исчерпание бюджета не ошибка"""
        graph = self._graph(args)
        options = SolveOptions(
            kind=SetKind.TOTAL if args.total else SetKind.MUTUAL,
            node_budget=args.budget,
            time_budget=args.time_budget,
            initial_lower_bound=args.seed_lower_bound,
            per_column_cap=args.column_cap,
            symmetry=args.symmetry,
            workers=args.workers,
        )
        report = solve(graph, options)
        self._emit(report.model_dump_json())
        return constants.EXIT_OK

    def _bounds_command(self, args: argparse.Namespace) -> int:
        """Обработка команды bounds"""
        dimensions = parse_dimensions(args.d)
        kind = TopologyKind(args.kind)
        if args.csv:
            if kind == TopologyKind.HYPERCUBE:
                rows = hypercube_table_rows(dimensions)
            else:
                rows = [report_row(bounds_for(TopologySpec(kind=kind, d=d))) for d in dimensions]
            self.stdout.write(rows_to_csv(rows))
            return constants.EXIT_OK
        reports = [bounds_for(TopologySpec(kind=kind, d=d)) for d in dimensions]
        if len(reports) == 1:
            self._emit(reports[0].model_dump_json())
        else:
            self._emit(json.dumps([report.model_dump(mode="json") for report in reports], ensure_ascii=False))
        return constants.EXIT_OK

    def _bypass_command(self, args: argparse.Namespace) -> int:
        """Обработка команды bypass"""
        graph = self._graph(args)
        report = bypass_vertices(graph)
        summary = BypassSummary(
            topology=str(graph.topology) if graph.topology else None,
            vertex_count=graph.vertex_count,
            bp=report.bp,
            bypass_vertices=[str(graph.label(v)) for v in report.bypass_vertices],
            total_mv_zero=report.bp == 0,
        )
        self._emit(summary.model_dump_json())
        return constants.EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    """Точка входа консольного скрипта mutvis"""
    return MutvisCli().run(argv)
