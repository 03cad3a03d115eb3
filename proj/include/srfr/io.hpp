#ifndef SRFR_IO_HPP
#define SRFR_IO_HPP

#include <istream>
#include <ostream>
#include <string>

#include "srfr/srfr.hpp"

namespace srfr {

// Line-oriented instance format. Blank lines and '#' comments are skipped.
// Keyworded lines, in order:
//   p <prime>
//   a <c0> <c1> ... <ck>     one line per modulus, coefficients low to high
//   u <c0> ... <cj>          one line per component, same count as 'a'
//   N <N_1> ... <N_n>
//   D <D>
// Coefficients are arbitrary integers, reduced mod p on load.
SRFRInstance parse_instance(std::istream& in);
SRFRInstance load_instance(const std::string& path);

void write_instance(std::ostream& out, const SRFRInstance& inst);
std::string format_instance(const SRFRInstance& inst);

// "a;b;c" rendering used in CSV cells holding vectors.
std::string join_ints(const std::vector<int>& v);

}  // namespace srfr

#endif
