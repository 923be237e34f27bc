#include "cli/report.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "locdom/errors.hpp"
#include "locdom/graph6.hpp"
#include "locdom/location.hpp"

namespace locdom::cli {

namespace {

using json = nlohmann::ordered_json;

template <class F>
auto timed(RunReport& r, const char* phase, F&& f) {
  const auto start = std::chrono::steady_clock::now();
  auto result = f();
  const std::chrono::duration<double, std::milli> took = std::chrono::steady_clock::now() - start;
  r.timings_ms.emplace_back(phase, took.count());
  return result;
}

void reverify(bool ok, const std::string& what) {
  if (!ok) throw Error(Errc::AssertionFailure, "serialized witness fails re-verification: " + what);
}

json witness_json(const VertexSet& s) { return {{"size", s.size()}, {"witness", set_json(s)}}; }

}  // namespace

json set_json(const VertexSet& s) {
  json out = json::array();
  s.for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

RunReport base_report(const Graph& g) {
  RunReport r;
  r.graph_id = encode_graph6(g);
  r.n = g.order();
  r.m = g.edge_count();
  r.twin_free = is_twin_free(g);
  return r;
}

RunReport analyze(const Graph& g, const Phases& phases) {
  RunReport r = base_report(g);
  if (phases.twins) r.twins = find_twins(g);
  if (phases.bound) {
    r.bound = timed(r, "bound", [&] { return construct_ld(g, phases.mode, phases.construct); });
    if (r.bound->decomposition) {
      r.s_value = r.bound->decomposition->s_value;
      r.k = r.bound->decomposition->k;
    }
  }
  if (phases.solve) {
    r.l_exact = timed(r, "min_locating", [&] { return min_locating(g, phases.oracle); });
    r.ld_exact = timed(r, "min_locating_dominating", [&] { return min_locating_dominating(g, phases.oracle); });
  }
  if (phases.partition2) {
    r.partition2 = timed(r, "partition2", [&] { return two_locating_partition(g, {std::max<std::size_t>(phases.oracle.max_order, 20)}); });
  }
  if (phases.sk) r.sk = timed(r, "sk", [&] { return s_k_of_graph(g, *phases.sk); });
  if (phases.sk_all) {
    r.sk_values = timed(r, "sk_all", [&] {
      std::vector<std::size_t> values;
      for (std::size_t k = 1; k <= g.order(); ++k) values.push_back(s_k_of_graph(g, k).value);
      return values;
    });
  }
  if (!phases.timings) r.timings_ms.clear();
  return r;
}

json to_json(const Graph& g, const RunReport& r, bool with_timings) {
  json out;
  out["graph"] = r.graph_id;
  out["n"] = r.n;
  out["m"] = r.m;
  out["twin_free"] = r.twin_free;
  if (r.twins) {
    json pairs = json::array();
    for (const auto& t : *r.twins) pairs.push_back({t.u, t.v, t.kind == TwinKind::Open ? "open" : "closed"});
    out["twins"] = std::move(pairs);
  }
  if (r.bound) {
    const BoundReport& b = *r.bound;
    if (r.n > 0) {
      reverify(is_locating(g, b.witness), "l_upper " + b.witness.to_string());
      reverify(is_locating_dominating(g, b.ld_witness), "ld_upper " + b.ld_witness.to_string());
    }
    out["mode"] = mode_name(b.mode);
    out["certified"] = b.certified;
    out["l_upper"] = witness_json(b.witness);
    out["ld_upper"] = witness_json(b.ld_witness);
    json cands = json::array();
    for (const auto& c : b.candidates) {
      cands.push_back({{"set", candidate_name(c.tag)}, {"size", c.size}, {"locating", c.locating}});
    }
    out["candidates"] = std::move(cands);
    if (b.decomposition) {
      const auto& d = *b.decomposition;
      out["good_set"] = set_json(d.a);
      out["b"] = d.b.size();
      out["c"] = d.c.size();
      out["a_prime"] = d.a_prime.size();
      out["z"] = d.z.size();
    }
  }
  if (r.s_value) out["S"] = *r.s_value;
  if (r.k) out["k"] = *r.k;
  if (r.l_exact) {
    reverify(is_locating(g, r.l_exact->witness), "l_exact");
    out["l_exact"] = witness_json(r.l_exact->witness);
  }
  if (r.ld_exact) {
    reverify(is_locating_dominating(g, r.ld_exact->witness), "ld_exact");
    out["ld_exact"] = witness_json(r.ld_exact->witness);
  }
  if (r.partition2) {
    if (r.partition2->found) {
      reverify(is_locating(g, r.partition2->x) && is_locating(g, r.partition2->y) && (r.partition2->x | r.partition2->y) == g.vertices() &&
                   !r.partition2->x.intersects(r.partition2->y),
               "partition2 partition");
    }
    out["partition2_found"] = r.partition2->found;
    if (r.partition2->found) out["partition2"] = {{"x", set_json(r.partition2->x)}, {"y", set_json(r.partition2->y)}};
  }
  if (r.sk) {
    json blocks = json::array();
    for (const auto& blk : r.sk->witness_partition) blocks.push_back(set_json(blk));
    out["sk"] = {{"k", r.sk->k}, {"value", r.sk->value}, {"partition", std::move(blocks)}};
  }
  if (r.sk_values) out["sk_values"] = *r.sk_values;
  if (r.skipped) out["skipped"] = *r.skipped;
  if (with_timings && !r.timings_ms.empty()) {
    json t;
    for (const auto& [phase, ms] : r.timings_ms) t[phase] = ms;
    out["timings_ms"] = std::move(t);
  }
  return out;
}

std::string render_text(const RunReport& r) {
  std::ostringstream os;
  os << "graph " << r.graph_id << "  n=" << r.n << " m=" << r.m << " twin_free=" << (r.twin_free ? "yes" : "no") << '\n';
  if (r.twins) {
    for (const auto& t : *r.twins) {
      os << "  twins " << t.u << ' ' << t.v << ' ' << (t.kind == TwinKind::Open ? "open" : "closed") << '\n';
    }
  }
  if (r.bound) {
    const BoundReport& b = *r.bound;
    os << "mode " << mode_name(b.mode) << '\n';
    if (b.decomposition) {
      const auto& d = *b.decomposition;
      os << "S=" << d.s_value << " k=" << d.k << " |B|=" << d.b.size() << " |C|=" << d.c.size()
         << " |A'|=" << d.a_prime.size() << " |Z|=" << d.z.size() << " good set " << d.a.to_string() << '\n';
    }
    os << "candidate  size  locating\n";
    for (const auto& c : b.candidates) {
      os << "  " << std::left << std::setw(9) << candidate_name(c.tag) << std::right << c.size << "     " << (c.locating ? "yes" : "no") << '\n';
    }
    os << "locating witness " << b.witness.to_string() << " size " << b.witness.size() << " (bound "
       << locating_bound(r.n) << ")\n";
    os << "locating-dominating witness " << b.ld_witness.to_string() << " size " << b.ld_witness.size()
       << " (bound " << ld_bound(r.n) << ")\n";
    os << "certified " << (b.certified ? "yes" : "no") << '\n';
  }
  if (r.l_exact) os << "L(G)=" << r.l_exact->size << " witness " << r.l_exact->witness.to_string() << '\n';
  if (r.ld_exact) os << "LD(G)=" << r.ld_exact->size << " witness " << r.ld_exact->witness.to_string() << '\n';
  if (r.partition2) {
    if (r.partition2->found) {
      os << "two-locating partition X=" << r.partition2->x.to_string() << " Y=" << r.partition2->y.to_string() << '\n';
    } else {
      os << "two-locating partition: NONE EXISTS" << (r.twin_free ? " (twin-free graph!)" : "") << '\n';
    }
  }
  if (r.sk) {
    os << "s_" << r.sk->k << "(G)=" << r.sk->value << " partition";
    for (const auto& blk : r.sk->witness_partition) os << ' ' << blk.to_string();
    os << '\n';
  }
  for (const auto& [phase, ms] : r.timings_ms) os << "time " << phase << " " << ms << " ms\n";
  return os.str();
}

}  // namespace locdom::cli
