#include <pybind11/pybind11.h>

PYBIND11_MODULE(_convexcalc, m) { m.doc() = "curve calculus bindings"; }
