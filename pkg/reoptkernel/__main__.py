import sys
import argparse
import logging
from collections import defaultdict
import reoptkernel.filters as filters
from reoptkernel.filters.base_filters import EXIT_FAILURE, EXIT_OK, EXIT_USAGE, FilterException, OpFilter, \
    Session, SourceFilter

LOG_LEVELS = ['DEBUG', 'INFO', 'WARNING', 'ERROR']

class UsageError(Exception):
    pass

def usage_exit(parser, s):
    parser.print_usage(sys.stderr)
    sys.stderr.write("reoptkernel: error: %s\n" % s)
    return EXIT_USAGE

class CustomAction(argparse.Action):
    def __call__(self, parser, namespace, values, option_string=None):
        if not 'ordered_args' in namespace:
            setattr(namespace, 'ordered_args', [])
        previous = namespace.ordered_args
        previous.append((self.dest, values))
        setattr(namespace, 'ordered_args', previous)

class CustomFormatter(argparse.HelpFormatter):
    def add_arguments(self, actions):
        # gets rid of "optional arguments" prefix
        self.end_section()

        action_list = defaultdict(list)

        for action in actions:
            if not isinstance(action, CustomAction):
                if action.dest != 'help':
                    action_list['Options'].append(action)
                continue
            inst = filters.factory.getInstance(action.dest)
            action_list[inst.CATEGORY].append(action)

        order = ['Loading',
                 'Gadgets',
                 'Kernels',
                 'Operations',
                 'Solving',
                 'Verifying',
                 'Printing',
                 'Saving',
                 'Options']

        for section_name in order:
            self.start_section(section_name)
            for action in action_list[section_name]:
                self.add_argument(action)
            self.end_section()

        self.start_section('')

def build_parser():
    parser = argparse.ArgumentParser(
        prog='reoptkernel',
        description='Kernels, reductions and exact oracles for reoptimization of parameterized graph problems.',
        formatter_class=CustomFormatter,
        usage='reoptkernel --load_filter [--operation] [--print_filter] [--save_filter]')
    for filter_name in filters.factory.getFilterNames():
        inst = filters.factory.getInstance(filter_name)
        parser.add_argument('--' + filter_name, required=False,
                            nargs=len(inst.arguments), help=inst.description,
                            metavar=tuple([arg.name for arg in inst.arguments]), action=CustomAction)
    parser.add_argument('--log_level', choices=LOG_LEVELS, default='WARNING',
                        help='Logging threshold for messages on standard error')
    return parser

def parse_filter_args(inst, values):
    try:
        return [arg.parse(value) for arg, value in zip(inst.arguments, values)]
    except ValueError as e:
        raise UsageError("'%s': %s" % (inst.name, e))

def run_chain(ordered_args):
    """Applies the filters in order. Returns the exit code"""
    session = None
    for i, (filter_name, values) in enumerate(ordered_args):
        inst = filters.factory.getInstance(filter_name)
        if i == 0 and not isinstance(inst, SourceFilter):
            raise UsageError("first argument must be a load or generating filter")
        if i > 0 and not isinstance(inst, OpFilter):
            raise UsageError("specified filter (argument %d:'%s') is not an operation filter" % (i+1, filter_name))
        arguments = parse_filter_args(inst, values)
        try:
            if session is None:
                session = inst.apply(*arguments)
            else:
                session = inst.apply(session, *arguments)
        except FilterException as e:
            sys.stderr.write("Error: (argument %d) '%s': %s\n" % (i+1, filter_name, str(e)))
            return e.EXIT_CODE
        if not isinstance(session, Session):
            sys.stderr.write("Error: got an incorrect return value from filter (argument %d) '%s'\n" % (i+1, filter_name))
            return EXIT_FAILURE
    return EXIT_OK

def run_command(argv):
    """Runs one filter chain, e.g. ['--load_instance', 'g.json', '--kernelize_vc', 'reopt2k',
    '--print_report']. Returns the exit code"""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return e.code

    logging.basicConfig(level=getattr(logging, args.log_level),
                        format='%(levelname)s %(name)s: %(message)s')

    if not 'ordered_args' in args:
        return usage_exit(parser, "no arguments given")

    try:
        return run_chain(args.ordered_args)
    except UsageError as e:
        return usage_exit(parser, str(e))

def main():
    sys.exit(run_command(sys.argv[1:]))

if __name__ == "__main__":
    main()
