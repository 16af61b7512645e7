import functools
import sys

import click

from ..config import config
from ..corpus import check_dict, crosscheck as run_crosscheck, fixture
from ..corpus.executor import executor_dict
from ..decomposition import big_brother, big_two_brother
from ..dismantling import (bipartite_dismantle, hyperbolic_order,
                           recognizer_dict, ss_dismantle)
from ..errors import (CertificateError, DecompositionError,
                      DisconnectedGraphError, GraphFileError,
                      GraphValidationError, PursuitError)
from ..game import (GameSpec, extract_optimal_policies, make_solver,
                    solve_capture, solve_visible, solve_witness)
from ..graph.core import UNBOUNDED, format_radius, parse_radius
from ..graph.structure import bipartition, blocks_and_articulations
from ..hyperbolicity import hyperbolicity as compute_hyperbolicity
from ..strategy import (bb_strategy, btb_witness_strategy, capture_strategy,
                        make_robber, mark_procedure, mark_strategy,
                        shadow_strategy, simulate as run_simulation)
from .graph_file import read_graph, read_graphs
from .serialize import document, dumps, summarize

EXIT_DISAGREEMENT = 1
EXIT_USAGE = 2
EXIT_INPUT = 3

INPUT_ERRORS = (GraphFileError, GraphValidationError, DisconnectedGraphError,
                CertificateError, DecompositionError)


class RadiusType(click.ParamType):
    """A speed: positive integer or 'inf'."""
    name = "radius"

    def convert(self, value, param, ctx):
        try:
            radius = parse_radius(value)
        except ValueError:
            self.fail("%r is not a non-negative integer or 'inf'" % value,
                      param, ctx)
        if radius < 1:
            self.fail("speeds start at 1", param, ctx)
        return radius


RADIUS = RadiusType()


def handle_errors(fn):
    """Map library errors onto the exit-code contract."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        try:
            return fn(*args, **kwargs)
        except INPUT_ERRORS as e:
            click.echo("Error: %s" % e, err=True)
            sys.exit(EXIT_INPUT)
        except PursuitError as e:
            click.echo("Error: %s" % e, err=True)
            sys.exit(EXIT_USAGE)
    return wrapper


def graph_input(fn):
    fn = click.option("--fixture", "fixture_id", default=None,
                      help="Use a named fixture such as sun3 or gk(2) "
                      "instead of a file")(fn)
    fn = click.argument("graph_file", required=False)(fn)
    return fn


def load_graph(graph_file, fixture_id):
    if (graph_file is None) == (fixture_id is None):
        raise click.UsageError("give either GRAPH_FILE or --fixture")
    if fixture_id is not None:
        return fixture(fixture_id)
    return read_graph(graph_file)


def emit(kind, payload, pretty):
    doc = document(kind, payload)
    click.echo(summarize(doc) if pretty else dumps(doc))


pretty_option = click.option("--pretty", is_flag=True,
                             help="Print a human-readable summary instead "
                             "of JSON")


@click.group()
def cli():
    """Cops and fast robbers: exact game solvers, dismantling orders and
    decompositions."""
    pass


@cli.command()
@graph_input
@click.option("--s", "s", type=RADIUS, default="1", help="Robber speed")
@click.option("--sprime", "s_prime", type=RADIUS, default="1",
              help="Cop speed")
@pretty_option
@handle_errors
def classify(graph_file, fixture_id, s, s_prime, pretty):
    """Decide (s, s')-dismantlability and print the certificate."""
    g = load_graph(graph_file, fixture_id)
    cert = ss_dismantle(g, s, s_prime)
    emit("classification", {
        "s": format_radius(s),
        "s_prime": format_radius(s_prime),
        "dismantlable": cert is not None,
        "certificate": None if cert is None else cert.to_dict(),
    }, pretty)


@cli.group()
def solve():
    """Solve a game exactly."""
    pass


def solve_options(fn):
    fn = pretty_option(fn)
    fn = click.option("--dump-value", is_flag=True,
                      help="Include every configuration")(fn)
    return graph_input(fn)


@solve.command()
@solve_options
@click.option("--s", "s", type=RADIUS, default="1", help="Robber speed")
@click.option("--sprime", "s_prime", type=RADIUS, default="1",
              help="Cop speed")
@handle_errors
def visible(graph_file, fixture_id, dump_value, pretty, s, s_prime):
    """Visible robber of speed s against a cop of speed s'."""
    g = load_graph(graph_file, fixture_id)
    emit("game-value", solve_visible(g, s, s_prime).to_dict(dump_value),
         pretty)


@solve.command()
@solve_options
@click.option("--k", "k", type=int, default=2, help="Witness period")
@click.option("--s", "s", type=RADIUS, default="1", help="Robber speed")
@click.option("--force", is_flag=True, help="Skip the size guards")
@handle_errors
def witness(graph_file, fixture_id, dump_value, pretty, k, s, force):
    """Robber visible only every k moves."""
    g = load_graph(graph_file, fixture_id)
    emit("game-value", solve_witness(g, k, s, force=force).to_dict(
        dump_value), pretty)


@solve.command()
@solve_options
@click.option("--radius", type=click.IntRange(min=0), default=1,
              help="Capture distance")
@handle_errors
def capture(graph_file, fixture_id, dump_value, pretty, radius):
    """Cop wins within distance `radius` after his move."""
    g = load_graph(graph_file, fixture_id)
    emit("game-value", solve_capture(g, radius).to_dict(dump_value), pretty)


@cli.command()
@graph_input
@click.option("--family", type=click.Choice(sorted(recognizer_dict)),
              required=True)
@click.option("--s", "s", type=RADIUS, default="1",
              help="Robber speed (ss)")
@click.option("--sprime", "s_prime", type=RADIUS, default="1",
              help="Cop speed (ss)")
@click.option("--k", "k", type=click.IntRange(min=1), default=2,
              help="Bidismantling radius (bi)")
@click.option("--force", is_flag=True, help="Skip the size guards")
@pretty_option
@handle_errors
def dismantle(graph_file, fixture_id, family, s, s_prime, k, force, pretty):
    """Find an elimination order of the given family, or print none."""
    g = load_graph(graph_file, fixture_id)
    cert = recognizer_dict[family](g, s=s, s_prime=s_prime, k=k,
                                   force=force)
    emit("certificate", None if cert is None else cert.to_dict(), pretty)


@cli.command()
@graph_input
@click.option("--kind", type=click.Choice(["blocks", "bb", "btb"]),
              required=True)
@pretty_option
@handle_errors
def decompose(graph_file, fixture_id, kind, pretty):
    """Block-cut tree, big brother or big two-brother decomposition."""
    g = load_graph(graph_file, fixture_id)
    if kind == "blocks":
        emit("blocks", blocks_and_articulations(g).to_dict(), pretty)
        return
    d = big_brother(g) if kind == "bb" else big_two_brother(g)
    emit("decomposition", None if d is None else d.to_dict(), pretty)


@cli.command()
@graph_input
@click.option("--order-radius", type=click.IntRange(min=1), default=None,
              help="Also give the (2r, r+2delta)-dismantling order read off "
              "a BFS tree for this r")
@pretty_option
@handle_errors
def hyperbolicity(graph_file, fixture_id, order_radius, pretty):
    """Exact hyperbolicity by the four-point condition."""
    g = load_graph(graph_file, fixture_id)
    payload = compute_hyperbolicity(g).to_dict()
    if order_radius is not None:
        payload["certificate"] = hyperbolic_order(g, order_radius).to_dict()
    emit("hyperbolicity", payload, pretty)


def _cop_strategy(g, cop, game, s, s_prime, k, radius):
    """Cop policy and the game it plays."""
    if cop == "shadow":
        cert = ss_dismantle(g, s, s_prime)
        if cert is None:
            raise CertificateError("graph is not (%s,%s)-dismantlable"
                                   % (format_radius(s),
                                      format_radius(s_prime)))
        return shadow_strategy(g, cert)
    if cop == "mark":
        return mark_strategy(g, mark_procedure(g, range(g.n), k))
    if cop == "bb":
        d = big_brother(g)
        if d is None:
            raise DecompositionError("graph is not a big brother graph")
        return bb_strategy(g, d, s)
    if cop == "btb":
        d = big_two_brother(g)
        if d is None:
            raise DecompositionError("graph is not a big two-brother graph")
        return btb_witness_strategy(g, d, k)
    if cop == "capture":
        if bipartition(g) is None:
            raise GraphValidationError("the capture strategy needs a "
                                       "bipartite graph")
        cert = bipartite_dismantle(g)
        if cert is None:
            raise CertificateError("graph is not bipartite dismantlable")
        return capture_strategy(g, cert)
    spec = {
        "visible": lambda: GameSpec.visible(s, s_prime),
        "witness": lambda: GameSpec.witness(k, s),
        "capture": lambda: GameSpec.capture(radius),
    }[game]()
    value = make_solver(g, spec, force=True).solve()
    return extract_optimal_policies(value, g)[0]


@cli.command()
@graph_input
@click.option("--cop", type=click.Choice(["shadow", "mark", "bb", "btb",
                                          "capture", "optimal"]),
              required=True)
@click.option("--robber", default="optimal",
              help="optimal, random:SEED or script:V0,V1,...")
@click.option("--game", type=click.Choice(["visible", "witness", "capture"]),
              default="visible", help="Game of the optimal cop")
@click.option("--s", "s", type=RADIUS, default=None,
              help="Robber speed (default 1, inf for bb)")
@click.option("--sprime", "s_prime", type=RADIUS, default="1",
              help="Cop speed")
@click.option("--k", "k", type=click.IntRange(min=1), default=3,
              help="Witness period")
@click.option("--radius", type=click.IntRange(min=0), default=1,
              help="Capture distance")
@click.option("--cap", type=click.IntRange(min=1), default=None,
              help="Cop moves before the robber is declared the survivor")
@pretty_option
@handle_errors
def simulate(graph_file, fixture_id, cop, robber, game, s, s_prime, k,
             radius, cap, pretty):
    """Play a cop strategy against a robber."""
    g = load_graph(graph_file, fixture_id)
    if s is None:
        s = UNBOUNDED if cop == "bb" else 1
    policy = _cop_strategy(g, cop, game, s, s_prime, k, radius)
    solver = make_solver(g, policy.spec, force=True)
    robber_policy = make_robber(robber, solver.solve(), solver)
    trace = run_simulation(g, policy.spec, policy, robber_policy, cap=cap)
    emit("trace", trace.to_dict(), pretty)


@cli.command()
@click.option("--max-n", type=click.IntRange(min=1), default=5,
              help="Largest vertex count of the corpus")
@click.option("--checks", default=",".join(c for c in check_dict
                                           if not check_dict[c].exploratory),
              help="Comma-separated check names")
@click.option("--sample", type=click.IntRange(min=0), default=None,
              help="Random connected graphs on max-n vertices instead of "
              "full enumeration")
@click.option("--seed", type=int, default=0)
@click.option("--graph6", "graph6_file", default=None,
              help="Run over the graphs of a graph6 file instead")
@click.option("--executor", type=click.Choice(sorted(executor_dict)),
              default=None, help="Worker pool backend")
@click.option("--workers", type=click.IntRange(min=1), default=None)
@pretty_option
@handle_errors
def crosscheck(max_n, checks, sample, seed, graph6_file, executor, workers,
               pretty):
    """Run theorem checks over a corpus of small graphs."""
    names = [name.strip() for name in checks.split(",") if name.strip()]
    graphs = None if graph6_file is None else read_graphs(graph6_file)
    report = run_crosscheck(max_n, names, sample=sample, seed=seed,
                            graphs=graphs,
                            executor=executor or config["executor"],
                            workers=workers)
    emit("crosscheck-report", report.to_dict(), pretty)
    if not report.passed:
        sys.exit(EXIT_DISAGREEMENT)


def main():
    cli()


if __name__ == "__main__":
    main()
