#pragma once

#include <map>
#include <sstream>
#include <string>
#include <utility>

#include "grp/ints.hpp"

namespace grp {

// Golden reference data, line-oriented: name<TAB>statistic<TAB>value<TAB>provenance.
// The same text ships as data/golden.tsv; --golden <file> overrides it.
inline const char* kGoldenData = R"(# grptool golden data v1
Alt(5)	meo	5	atlas-gap
Alt(6)	meo	5	atlas-gap
Alt(7)	meo	7	atlas-gap
Alt(8)	meo	15	atlas-gap
Alt(9)	meo	15	atlas-gap
Alt(10)	meo	21	atlas-gap
Alt(11)	meo	21	atlas-gap
Alt(12)	meo	35	atlas-gap
Alt(13)	meo	35	atlas-gap
Alt(5)	m	5	atlas-gap
Alt(6)	m	6	atlas-gap
Alt(7)	m	7	atlas-gap
Alt(8)	m	8	atlas-gap
Alt(9)	m	9	atlas-gap
Alt(10)	m	10	atlas-gap
Alt(11)	m	11	atlas-gap
Alt(12)	m	12	atlas-gap
Alt(13)	m	13	atlas-gap
Alt(5)	m2	6	atlas-gap
Alt(6)	m2	10	atlas-gap
Alt(7)	m2	15	atlas-gap
Alt(8)	m2	15	atlas-gap
Alt(9)	m2	36	atlas-gap
Alt(10)	m2	45	atlas-gap
Alt(11)	m2	55	atlas-gap
Alt(12)	m2	66	atlas-gap
Alt(13)	m2	78	atlas-gap
Alt(5)	psi	211	atlas-gap
Alt(6)	psi	1411	atlas-gap
Alt(7)	psi	12601	atlas-gap
Alt(8)	psi	137047	atlas-gap
Alt(9)	psi	1516831	atlas-gap
Alt(10)	psi	18111751	atlas-gap
Alt(11)	psi	223179001	atlas-gap
Alt(12)	psi	2973194071	atlas-gap
Alt(13)	psi	46287964867	atlas-gap
Alt(14)	psi	835826439631	atlas-gap
Alt(15)	psi	15722804528341	atlas-gap
Alt(5)	order	60	formula
Alt(6)	order	360	formula
Alt(7)	order	2520	formula
Alt(8)	order	20160	formula
Alt(9)	order	181440	formula
Alt(10)	order	1814400	formula
Alt(11)	order	19958400	formula
Alt(12)	order	239500800	formula
Alt(13)	order	3113510400	formula
Alt(14)	order	43589145600	formula
Alt(15)	order	653837184000	formula
M11	meo	11	atlas-gap
M11	m	11	atlas-gap
M12	meo	11	atlas-gap
M12	m	12	atlas-gap
M22	meo	11	atlas-gap
M22	m	22	atlas-gap
M23	meo	23	atlas-gap
M23	m	23	atlas-gap
M24	meo	23	atlas-gap
M24	m	24	atlas-gap
HS	meo	20	atlas-gap
HS	m	100	atlas-gap
PSU(3,3)	meo	12	atlas-gap
PSU(3,3)	m	28	atlas-gap
PSU(3,5)	meo	10	atlas-gap
PSU(3,5)	m	50	atlas-gap
PSU(4,3)	meo	12	atlas-gap
PSU(4,3)	m	112	atlas-gap
PSp(6,2)	meo	15	atlas-gap
PSp(6,2)	m	28	atlas-gap
PSp(8,2)	meo	30	atlas-gap
PSp(8,2)	m	120	atlas-gap
PSp(4,3)	meo	12	atlas-gap
PSp(4,3)	m	27	atlas-gap
PSL(2,5)	m	5	published-classification
PSL(2,7)	m	7	published-classification
PSL(2,9)	m	6	published-classification
PSL(2,11)	m	11	published-classification
PSL(3,2)	m	7	published-classification
PSL(4,2)	m	8	published-classification
)";

// (name, statistic) -> value
using GoldenMap = std::map<std::pair<std::string, std::string>, bigint>;

inline GoldenMap parse_golden(const std::string& text) {
  GoldenMap out;
  std::istringstream is(text);
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name, stat, value, provenance;
    if (!std::getline(ls, name, '\t') || !std::getline(ls, stat, '\t') ||
        !std::getline(ls, value, '\t') || !std::getline(ls, provenance))
      throw error("malformed golden line " + std::to_string(lineno));
    out[{name, stat}] = bigint(value);
  }
  return out;
}

inline const GoldenMap& embedded_golden() {
  static const GoldenMap m = parse_golden(kGoldenData);
  return m;
}

}  // namespace grp
