from reoptkernel.filters.base_filters import FilterFactory
import sys

factory = FilterFactory()

def warn(name, e):
    sys.stderr.write("Warning: filter '%s' disabled because of ImportError: %s\n" % (name, str(e)))

#Load filters first
try: import reoptkernel.filters.load_filters.load_instance
except ImportError as e: warn('load_instance', e)
try: import reoptkernel.filters.load_filters.load_dimacs
except ImportError as e: warn('load_dimacs', e)
try: import reoptkernel.filters.load_filters.random_graph
except ImportError as e: warn('random_graph', e)

#Gadgets
try: import reoptkernel.filters.gadget_filters.gadget_extremal
except ImportError as e: warn('gadget_extremal', e)
try: import reoptkernel.filters.gadget_filters.gadget_setcover_cvc
except ImportError as e: warn('gadget_setcover_cvc', e)
try: import reoptkernel.filters.gadget_filters.gadget_negative
except ImportError as e: warn('gadget_negative', e)
try: import reoptkernel.filters.gadget_filters.gadget_clique_reopt
except ImportError as e: warn('gadget_clique_reopt', e)

#Kernels
try: import reoptkernel.filters.kernel_filters.find_crown
except ImportError as e: warn('find_crown', e)
try: import reoptkernel.filters.kernel_filters.kernelize_vc
except ImportError as e: warn('kernelize_vc', e)
try: import reoptkernel.filters.kernel_filters.reopt_kernelize
except ImportError as e: warn('reopt_kernelize', e)

#Operations
try: import reoptkernel.filters.op_filters.set_parameter
except ImportError as e: warn('set_parameter', e)
try: import reoptkernel.filters.op_filters.materialize_kernel
except ImportError as e: warn('materialize_kernel', e)

#Solving
try: import reoptkernel.filters.solve_filters.solve
except ImportError as e: warn('solve', e)

#Verifying
try: import reoptkernel.filters.verify_filters.verify_crown
except ImportError as e: warn('verify_crown', e)
try: import reoptkernel.filters.verify_filters.verify_solution
except ImportError as e: warn('verify_solution', e)
try: import reoptkernel.filters.verify_filters.verify_kernel_equivalence
except ImportError as e: warn('verify_kernel_equivalence', e)

#Print filters
try: import reoptkernel.filters.print_filters.print_report
except ImportError as e: warn('print_report', e)
try: import reoptkernel.filters.print_filters.print_instance
except ImportError as e: warn('print_instance', e)

#Save filters last
try: import reoptkernel.filters.save_filters.save_instance
except ImportError as e: warn('save_instance', e)
try: import reoptkernel.filters.save_filters.save_dimacs
except ImportError as e: warn('save_dimacs', e)
