#include "swapreach/bench.hpp"

#include <chrono>
#include <iomanip>
#include <sstream>

#include "swapreach/oracle.hpp"
#include "swapreach/tree_solver.hpp"
#include "swapreach/witness.hpp"

namespace swapreach {

namespace {

std::string run_op(const Instance& inst, const std::string& op, const BenchCase& c) {
  if (op == "solve") {
    return solve_tree(inst).yes ? "yes" : "no";
  }
  if (op == "witness") {
    std::uint64_t len = 0;
    build_witness_stream(inst, c.cap, [&len](SwapMove) { ++len; });
    return "ok(" + std::to_string(len) + ")";
  }
  if (op == "oracle") {
    const OracleResult r = bfs_reachable(inst, c.budget);
    switch (r.status) {
      case SearchStatus::Reachable: return "reachable(" + std::to_string(r.distance) + ")";
      case SearchStatus::Unreachable: return "unreachable";
      case SearchStatus::Exhausted: return "exhausted";
    }
  }
  return "unknown-op";
}

}  // namespace

std::vector<BenchRow> run_bench(const std::vector<BenchCase>& suite) {
  std::vector<BenchRow> rows;
  for (const BenchCase& c : suite) {
    Instance inst;
    bool generated = false;
    std::string gen_error;
    try {
      inst = gen_instance(c.spec);
      generated = true;
    } catch (const Error& e) {
      gen_error = errc_name(e.code());
    }
    for (const std::string& op : c.ops) {
      BenchRow row;
      row.spec = c.spec;
      row.op = op;
      if (!generated) {
        row.outcome = gen_error;
        rows.push_back(std::move(row));
        continue;
      }
      const auto t0 = std::chrono::steady_clock::now();
      try {
        row.outcome = run_op(inst, op, c);
      } catch (const Error& e) {
        row.outcome = errc_name(e.code());
      }
      const auto t1 = std::chrono::steady_clock::now();
      row.millis = std::chrono::duration<double, std::milli>(t1 - t0).count();
      rows.push_back(std::move(row));
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  out << "op,shape,n,density,seed,millis,outcome\n";
  for (const BenchRow& r : rows) {
    out << r.op << "," << shape_name(r.spec.shape) << "," << r.spec.agent_count << ","
        << r.spec.accept_density << "," << r.spec.seed << "," << std::fixed
        << std::setprecision(3) << r.millis << "," << r.outcome << "\n";
    out.unsetf(std::ios::floatfield);
  }
  return out.str();
}

std::string bench_text(const std::vector<BenchRow>& rows) {
  std::ostringstream out;
  for (const BenchRow& r : rows) {
    out << std::left << std::setw(8) << r.op << " " << std::setw(9) << shape_name(r.spec.shape)
        << " n=" << std::setw(7) << r.spec.agent_count << " density=" << std::setw(5)
        << r.spec.accept_density << " seed=" << std::setw(12) << r.spec.seed << " " << std::fixed
        << std::setprecision(3) << std::right << std::setw(12) << r.millis << " ms  " << r.outcome
        << "\n";
    out.unsetf(std::ios::floatfield);
  }
  if (rows.empty()) out << "no rows\n";
  return out.str();
}

}  // namespace swapreach
