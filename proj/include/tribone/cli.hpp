#ifndef TRIBONE_CLI_HPP
#define TRIBONE_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include "tribone/engine.hpp"

namespace tribone {

/* SVG picture of a tiling: the hexagonal cells of region_T(n) as outlines and
 * every placement as a rounded three-cell bar, solid fill for positive
 * weights and hatched fill for negative ones.  Output is byte-deterministic
 * for identical input. */
std::string render_svg(const Tiling& tiling);

/* One command-line invocation (arguments without the program name); results
 * go to `out`, diagnostics to `err`.  Returns 0 on success, 1 on domain
 * errors (fixed-cell triangles, non-tileable certificate requests, timeouts,
 * malformed input files), 2 on usage errors. */
int run_cli(std::vector<std::string> args, std::ostream& out, std::ostream& err);

}  // namespace tribone

#endif
