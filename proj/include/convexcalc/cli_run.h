#pragma once

namespace convexcalc {

int cli_run(int argc, char** argv);

} // namespace convexcalc
