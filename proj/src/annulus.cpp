namespace convexcalc {}
