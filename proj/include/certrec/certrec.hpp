#ifndef CERTREC_CERTREC_HPP
#define CERTREC_CERTREC_HPP

#include "certrec/certificate.hpp"
#include "certrec/graph.hpp"
#include "certrec/graph_io.hpp"
#include "certrec/obstructions.hpp"
#include "certrec/patterns.hpp"
#include "certrec/recognizers.hpp"
#include "certrec/search.hpp"
#include "certrec/tpg.hpp"
#include "certrec/uig.hpp"

namespace certrec {

inline Verdict recognize(const Graph& g, GraphClass c) {
  switch (c) {
    case GraphClass::star: return recognize_star(g);
    case GraphClass::split: return recognize_split(g);
    case GraphClass::bipartite_chain: return recognize_bipartite_chain(g);
    case GraphClass::trivially_perfect: return recognize_trivially_perfect(g);
    case GraphClass::unit_interval: return recognize_unit_interval(g);
  }
  return {};
}

}  // namespace certrec

#endif  // CERTREC_CERTREC_HPP
