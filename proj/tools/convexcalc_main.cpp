#include "convexcalc/cli_run.h"

int main(int argc, char** argv) { return convexcalc::cli_run(argc, argv); }
