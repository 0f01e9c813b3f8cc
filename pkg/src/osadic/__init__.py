"""Quadraticity and l-adicity of Orlik-Solomon algebras of simple matroids.

Two independent routes to the same verdicts: combinatorial (chords of
circuits, two closure operators on subset systems) and algebraic (exact
ideal membership in the exterior algebra over the rationals), plus batteries
that cross-validate them.
"""

__version__ = "0.1.0"

from .bitsets import elements, format_word, word_of
from .chordality import (ChordalityReport, ChordWitness, chordality_report,
                         find_chord, is_l_chordal)
from .closure import (SetSystem, circuits_covered, delta_closure,
                      delta_prime_closure)
from .errors import (CircuitAxiomError, ComparablePairError,
                     EliminationFailureError, EmptyCircuitError,
                     GroundMismatchError, GroundTooLargeError, InputError,
                     NotACircuitError, NotHomogeneousError, NotSimpleError,
                     ParseError)
from .exterior import ExteriorElement, boundary, circuit_boundary, wedge
from .ideal import (AdicityReport, IdealSpan, ideal_degree_span, in_ideal,
                    in_ideal_components, is_l_adic, is_quadratic)
from .instances import (complete_graph, cycle_graph, fano_matrix, fig1,
                        parse_circuit_file, parse_graph_file,
                        parse_matrix_file, resolve_instance, wheel_graph)
from .matroid import (BinaryMatrix, CircuitFamily, DEFAULT_MAX_ELEMENTS,
                      GraphInput, GroundSet, circuits_of_binary_matrix,
                      circuits_of_graph, is_binary, is_binary_disjoint_union,
                      validate_circuit_family)
from .verify import (CheckResult, adicity_index, full_battery,
                     instance_battery, three_way_circuit_check)
