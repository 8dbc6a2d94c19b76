# -*- coding: utf-8 -*-
"""
Command line front end. A scenario file is a JSON document naming a
`command` and its payload; it is checked against the bundled schema,
dispatched to the library and answered with a report on stdout.

Exit codes: 0 success, 2 bad input or failed precondition, 3 a
mathematical consistency check failed.
"""
__title__ = 'csalab'
__license__ = 'MIT'

import argparse
import json
import logging
import sys

import jsonschema

from . import settings
from .brauer import (QQ, AbelianField, CyclicData, cyclic_algebra, exponent,
                     index, make_class, restrict)
from .configuration import Configuration, Enumeration, MODES
from .embed import (EmbedInstance, Thm6Scenario, counterexample_run,
                    embed_check, thm6_certificate, thm6_divisibility,
                    thm7_pipeline)
from .generic import GenericAlgebra, MixedClass
from .groupring import FiniteGroup, GroupRingElement, Subgroup
from .reduction import (FieldBridge, SplitOracle, TableOracle, TransferSetup,
                        UnmovedOracle, reduce_double, reduce_single)
from .utils import CsalabException, FileHelper, format_fraction, parse_fraction
from .version import __version__

log = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_PRECONDITION = 2
EXIT_CONSISTENCY = 3


class ScenarioException(CsalabException):
    pass


def load_schema():
    return FileHelper.loadResourceJson(settings.SCHEMA_FILE)


def validate_scenario(doc, schema=None):
    jsonschema.validate(instance=doc, schema=schema or load_schema())
    return doc


def check_limits(doc, config):
    """Refuses conductors and group orders above the configured ceilings
    before anything is built.
    """
    stack = [doc]
    while stack:
        node = stack.pop()
        if isinstance(node, list):
            stack.extend(node)
            continue
        if not isinstance(node, dict):
            continue
        conductor = node.get('conductor')
        if isinstance(conductor, int) and conductor > config.MAX_CONDUCTOR:
            raise ScenarioException('conductor %d exceeds MAX_CONDUCTOR = %d'
                                    % (conductor, config.MAX_CONDUCTOR))
        order = None
        if isinstance(node.get('table'), list):
            order = len(node['table'])
        elif isinstance(node.get('cyclic_orders'), list):
            order = 1
            for k in node['cyclic_orders']:
                order *= k
        if order is not None and order > config.MAX_GROUP_ORDER:
            raise ScenarioException('group of order %d exceeds MAX_GROUP_ORDER = %d'
                                    % (order, config.MAX_GROUP_ORDER))
        stack.extend(node.values())


def parse_field(node):
    if node is None:
        return QQ
    return AbelianField(node['conductor'], node.get('fixing', ()))


def parse_invariants(node):
    """[[place, "num/den"], ...] or {"place": "num/den"}."""
    pairs = node.items() if isinstance(node, dict) else node
    inv = {}
    for place, value in pairs:
        key = str(place)
        if key in inv:
            raise ScenarioException('place %s listed twice' % key)
        inv[key] = parse_fraction(value)
    return inv


def parse_class(node):
    return make_class(parse_field(node.get('field')),
                      parse_invariants(node['invariants']))


def parse_algebra(node):
    if 'generic' in node:
        arith = parse_class(node['class']) if 'class' in node else None
        return MixedClass(GenericAlgebra(node['generic']), node.get('c', 1), arith)
    return parse_class(node)


def algebra_to_dict(x):
    if isinstance(x, MixedClass):
        return {'generic': x.N, 'c': x.c, 'class': x.arith_class.to_dict()}
    return x.to_dict()


def parse_group(node):
    if 'cyclic_orders' in node:
        orders = node['cyclic_orders']
        if len(orders) == 1:
            return FiniteGroup.cyclic(orders[0]), None
        return FiniteGroup.abelian(orders), None
    if 'table' in node:
        return FiniteGroup(node['table']), None
    bridge = FieldBridge(parse_field(node['field']))
    return bridge.group, bridge


def parse_transfer(node):
    group, bridge = parse_group(node['group'])
    sub = Subgroup(group, node['subgroup'], validate=True) \
        if 'subgroup' in node else None
    return TransferSetup(group, sub, node['r'], node['n'], bridge)


def _table_key(key, arity):
    try:
        if arity == 2:
            alpha, beta = key
            return (tuple(int(x) for x in alpha), tuple(int(x) for x in beta))
        return tuple(int(x) for x in key)
    except (TypeError, ValueError):
        raise ScenarioException('table key %r does not match %d transfer(s)'
                                % (key, arity))


def parse_oracle(node, transfers):
    kind = node['kind']
    if kind == 'split':
        return SplitOracle(node.get('value', 1))
    if kind == 'table':
        table = {}
        for key, value in node['entries']:
            table[_table_key(key, len(transfers))] = value
        return TableOracle(table, node.get('default'))
    pairs = []
    for (setup, tnode) in transfers:
        if 'A' not in tnode:
            raise ScenarioException('unmoved oracle needs an algebra A per transfer')
        pairs.append((parse_algebra(tnode['A']), setup))
    return UnmovedOracle(parse_algebra(node['B']), pairs)


def parse_element(setup, coeffs):
    return GroupRingElement(setup.space, setup.r, coeffs)


def build_enumeration(doc, args, config):
    node = dict(doc.get('enumeration', {}))
    for key in ('mode', 'budget', 'seed', 'samples'):
        value = getattr(args, key, None)
        if value is not None:
            node[key] = value
    return Enumeration(mode=node.get('mode', config.enumeration_mode),
                       budget=node.get('budget', config.ENUMERATION_BUDGET),
                       seed=node.get('seed', config.DEFAULT_SEED),
                       samples=node.get('samples', config.DEFAULT_SAMPLES))


def run_index(doc, env):
    c = parse_class(doc['class'])
    return {'class': c.to_dict()}, {'index': index(c), 'exponent': exponent(c)}


def run_restrict(doc, env):
    c = parse_class(doc['class'])
    target = parse_field(doc['target'])
    out = restrict(c, target)
    return ({'class': c.to_dict(), 'target': target.to_dict()},
            {'class': out.to_dict(), 'index': index(out)})


def run_cyclic(doc, env):
    data = CyclicData(parse_field(doc['field']), doc['a'], doc.get('generator'))
    c = cyclic_algebra(data)
    return ({'field': data.field.to_dict(), 'a': format_fraction(data.a),
             'generator': data.generator},
            {'class': c.to_dict(), 'index': index(c)})


def run_embed_check(doc, env):
    D = parse_class(doc['D'])
    E = parse_algebra(doc['E'])
    inst = EmbedInstance(D, doc['a'], D.base, E, doc['N'], E.base)
    result = embed_check(inst)
    echo = inst.to_dict()
    echo['E'] = algebra_to_dict(E)
    return echo, result.to_dict()


def run_counterexample(doc, env):
    report = counterexample_run(doc['p1'], doc['p2'], doc['level'])
    return {'p1': doc['p1'], 'p2': doc['p2'], 'level': doc['level']}, \
        report.to_dict()


def run_reduce(doc, env):
    pairs = [(parse_transfer(t), t) for t in doc['transfers']]
    oracle = parse_oracle(doc['oracle'], pairs)
    setups = [setup for setup, _ in pairs]
    if len(setups) == 1:
        report = reduce_single(setups[0], oracle, env.enumeration, env.config)
    else:
        report = reduce_double(setups[0], setups[1], oracle, env.enumeration,
                               env.config)
    echo = {'transfers': [s.to_dict() for s in setups],
            'oracle': oracle.describe()}
    return echo, report.to_dict()


def _scenario_fields(doc):
    K1, K2 = parse_field(doc.get('K1')), parse_field(doc.get('K2'))
    D1 = make_class(QQ, parse_invariants(doc['D1']))
    D2 = make_class(QQ, parse_invariants(doc['D2']))
    return K1, D1, K2, D2


def run_thm6(doc, env):
    K1, D1, K2, D2 = _scenario_fields(doc)
    sc = Thm6Scenario(K1, D1, K2, D2, doc['N'])
    if 'certify' in doc:
        env.config.certify = doc['certify']
    report = thm6_divisibility(sc, env.enumeration, env.config)
    certs = []
    for item in doc.get('certificates', ()):
        alpha = parse_element(sc.setup1, item['alpha'])
        beta = parse_element(sc.setup2, item['beta'])
        certs.append(thm6_certificate(sc, alpha, beta, item['p']).to_dict())
    result = report.to_dict()
    result['certificates'] = certs
    return sc.to_dict(), result


def run_thm7(doc, env):
    K1, D1, K2, D2 = _scenario_fields(doc)
    report = thm7_pipeline(K1, D1, K2, D2, doc['N'], doc.get('sweep', 0),
                           env.enumeration, env.config)
    return report.scenario.to_dict(), report.to_dict()


COMMANDS = {
    'index': run_index,
    'restrict': run_restrict,
    'cyclic': run_cyclic,
    'embed-check': run_embed_check,
    'counterexample': run_counterexample,
    'reduce': run_reduce,
    'thm6': run_thm6,
    'thm7': run_thm7,
}


class RunEnvironment(object):
    def __init__(self, config, enumeration):
        self.config = config
        self.enumeration = enumeration


def _plain(value):
    """JSON-ready copy: tuples become lists, everything else is kept."""
    if isinstance(value, dict):
        return dict((str(k), _plain(v)) for k, v in value.items())
    if isinstance(value, (list, tuple)):
        return [_plain(v) for v in value]
    return value


def run_document(doc, args=None, config=None):
    """Validated scenario -> report dict."""
    args = args or argparse.Namespace()
    validate_scenario(doc)
    config = config or Configuration()
    check_limits(doc, config)
    threads = getattr(args, 'threads', None) or doc.get('threads')
    if threads:
        config.number_threads = threads
    env = RunEnvironment(config, build_enumeration(doc, args, config))
    command = doc['command']
    log.debug('dispatching %s', command)
    echo, result = COMMANDS[command](doc, env)
    report = {'format': settings.REPORT_FORMAT_VERSION, 'command': command,
              'input': echo, 'result': result}
    if command in ('reduce', 'thm6', 'thm7'):
        report['enumeration'] = env.enumeration.to_dict()
    return _plain(report)


def render_json(report):
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False)


def _is_flat(value):
    items = value.values() if isinstance(value, dict) else value
    return not any(isinstance(v, (dict, list)) for v in items)


def render_text(report, indent=0):
    """Indented key: value listing; flat containers stay on one line."""
    pad = '  ' * indent
    if not isinstance(report, (dict, list)) or _is_flat(report):
        return pad + json.dumps(report, sort_keys=True)
    lines = []
    if isinstance(report, dict):
        for key in sorted(report):
            value = report[key]
            if isinstance(value, (dict, list)) and not _is_flat(value):
                lines.append('%s%s:' % (pad, key))
                lines.append(render_text(value, indent + 1))
            else:
                lines.append('%s%s: %s' % (pad, key, json.dumps(value, sort_keys=True)))
    else:
        for i, value in enumerate(report):
            lines.append('%s- [%d]' % (pad, i))
            lines.append(render_text(value, indent + 1))
    return '\n'.join(lines)


def _fail(kind, reason, code):
    reason = ' '.join(str(reason).split())
    sys.stderr.write('error: kind=%s reason=%s\n' % (kind, reason))
    return code


def build_parser():
    parser = argparse.ArgumentParser(
        prog='csalab',
        description='Central simple algebras over abelian number fields: '
                    'indices, embeddings and index-reduction gcds.')
    parser.add_argument('scenario', help='scenario JSON file')
    parser.add_argument('--mode', choices=MODES, help='enumeration mode')
    parser.add_argument('--budget', type=int, help='exhaustive enumeration budget')
    parser.add_argument('--seed', type=int, help='sampling seed')
    parser.add_argument('--samples', type=int, help='sample count in sampled mode')
    parser.add_argument('--threads', type=int, help='enumeration worker threads')
    parser.add_argument('--json', action='store_true',
                        help='print the JSON report only')
    parser.add_argument('--verbose', action='store_true', help='debug logging')
    parser.add_argument('--version', action='version',
                        version='csalab %s' % __version__)
    return parser


def main(argv=None, stdout=None):
    args = build_parser().parse_args(argv)
    stdout = stdout or sys.stdout

    handler = logging.StreamHandler(sys.stderr)
    handler.setFormatter(logging.Formatter('%(levelname)s %(name)s: %(message)s'))
    root = logging.getLogger('csalab')
    root.addHandler(handler)
    root.setLevel(logging.DEBUG if args.verbose else logging.WARNING)
    try:
        try:
            with open(args.scenario, encoding='utf-8') as f:
                doc = json.load(f)
        except (OSError, ValueError) as exc:
            return _fail('input', exc, EXIT_PRECONDITION)
        try:
            report = run_document(doc, args)
        except jsonschema.ValidationError as exc:
            return _fail('schema', exc.message, EXIT_PRECONDITION)
        except CsalabException as exc:
            code = EXIT_CONSISTENCY if exc.kind == 'consistency' else EXIT_PRECONDITION
            return _fail(exc.kind, exc, code)

        stdout.write(render_json(report) + '\n')
        if not args.json:
            stdout.write('\n' + render_text(report) + '\n')
        return EXIT_OK
    finally:
        root.removeHandler(handler)


if __name__ == '__main__':
    sys.exit(main())
