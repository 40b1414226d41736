#include "envelope/cli.hpp"

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <functional>
#include <iostream>
#include <thread>

#include "CLI11.hpp"
#include "envelope/bar.hpp"
#include "envelope/catalog.hpp"
#include "envelope/chevalley.hpp"
#include "envelope/error.hpp"
#include "envelope/ginfty.hpp"
#include "envelope/harrison.hpp"
#include "envelope/io.hpp"
#include "envelope/koszul.hpp"

namespace envelope {

namespace {

// f(0..count-1) on up to `jobs` threads; results in index order.
template <class T>
std::vector<T> parallel_map(int count, int jobs, const std::function<T(int)>& f) {
  std::vector<T> out(static_cast<std::size_t>(std::max(count, 0)));
  std::vector<std::exception_ptr> errors(out.size());
  std::atomic<int> next{0};
  auto worker = [&] {
    for (int i = next++; i < count; i = next++) {
      try {
        out[i] = f(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const int width = std::max(1, std::min(jobs, count));
  std::vector<std::thread> threads;
  for (int t = 1; t < width; ++t) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

bool is_graded(const AlgebraPresentation& a, const ModulePresentation* m) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    if (a.basis.degree(i) != 0) return true;
  if (m)
    for (std::size_t v = 0; v < m->dim(); ++v)
      if (m->basis.degree(v) != 0) return true;
  return false;
}

// Internal degree of a word: unshifted letter degrees, letters >= dim a from m.
int word_degree(const AlgebraPresentation& a, const ModulePresentation* m, const Letters& w) {
  const int n = static_cast<int>(a.dim());
  int d = 0;
  for (int x : w) d += x < n ? a.degree(x) : m->basis.degree(static_cast<std::size_t>(x - n));
  return d;
}

std::vector<int> space_tags(const AlgebraPresentation& a, const ModulePresentation* m, const WordSpace& s) {
  std::vector<int> t;
  for (std::size_t q = 0; q < s.dim(); ++q) t.push_back(word_degree(a, m, s.representative(q)));
  return t;
}

std::vector<int> word_tags(const AlgebraPresentation& a, const ModulePresentation* m, const std::vector<Letters>& ws) {
  std::vector<int> t;
  for (const auto& w : ws) t.push_back(word_degree(a, m, w));
  return t;
}

// A complex by slots first..last. d(n) leaves slot n; for homology it lands in n-1, for
// cohomology in n+1. d must also answer one index past the range on the incoming side.
struct Complex {
  int first = 0;
  int last = 0;
  bool cohomological = false;
  std::function<SparseMap(int)> d;
  std::function<std::vector<int>(int)> tags;
  std::string note;
};

void fill(BettiReport& report, const Complex& c, int jobs) {
  // indices of d needed: homology first..last+1, cohomology first-1..last
  const int lo = c.cohomological ? c.first - 1 : c.first;
  const int hi = c.cohomological ? c.last : c.last + 1;
  const auto maps = parallel_map<SparseMap>(hi - lo + 1, jobs, [&](int i) { return c.d(lo + i); });
  auto at = [&](int n) -> const SparseMap& { return maps[static_cast<std::size_t>(n - lo)]; };
  bool square_zero = true;
  std::string where;
  for (int n = c.first; n <= c.last; ++n) {
    const SparseMap& out = at(n);
    const SparseMap& in = c.cohomological ? at(n - 1) : at(n + 1);
    try {
      for (auto e : betti_entries(n, out, in, c.tags ? c.tags(n) : std::vector<int>{})) {
        e.note = c.note;
        report.entries.push_back(e);
      }
    } catch (const Error& err) {
      if (err.code() != ErrorCode::CompositeNotZero) throw;
      square_zero = false;
      where += (where.empty() ? "" : ",") + std::to_string(n);
    }
  }
  report.check(c.cohomological ? "coboundary squares to zero" : "boundary squares to zero", square_zero,
               where.empty() ? "" : "fails at weight " + where);
}

void require_kind(bool ok, const std::string& theory, const std::string& need) {
  if (!ok) throw Error(ErrorCode::ValidationError, "theory " + theory + " needs " + need);
}

BettiReport run_word_theory(const JobConfig& job, const AlgebraPresentation& in,
                            const std::optional<ModulePresentation>& module) {
  const bool hoch = job.theory == "hochschild";
  if (hoch) require_kind(in.has_product(), job.theory, "an algebra with a product");
  else require_kind(in.kind == Kind::commutative || in.kind == Kind::gerstenhaber, job.theory,
                    "a commutative algebra");
  const AlgebraPresentation a = in.kind == Kind::gerstenhaber ? forget_bracket(in) : in;
  const int n_max = job.max_weight;
  BettiReport report;
  Complex c;
  if (job.direction == "homology" && !module) {
    const bool graded = is_graded(a, nullptr);
    if (hoch) {
      c.note = "bar resolution";
      c.first = 0;
      c.last = n_max;
      c.d = [a](int n) { return n == 0 ? SparseMap(0, a.dim()) : bar_boundary(a, n); };
      if (graded) c.tags = [a](int n) { return space_tags(a, nullptr, tensor_space(a, n + 1)); };
    } else {
      c.note = "shuffle quotient";
      c.first = 1;
      c.last = n_max;
      c.d = [a](int n) {
        return n == 1 ? SparseMap(0, harrison_chain_space(a, 1).dim()) : harrison_differential(a, n);
      };
      if (graded) c.tags = [a](int n) { return space_tags(a, nullptr, harrison_chain_space(a, n)); };
    }
    fill(report, c, job.jobs);
    return report;
  }
  const ModulePresentation m = module ? *module : catalog::regular_module(a);
  const bool graded = is_graded(a, &m);
  c.first = 0;
  c.last = n_max;
  c.note = module ? "module" : "regular module";
  if (job.direction == "homology") {
    c.d = [a, m, hoch](int n) {
      if (n == 0) {
        const std::size_t dim = hoch ? mixed_tensor_space(a, m, 1).dim() : harrison_chain_space(a, m, 1).dim();
        return SparseMap(0, dim);
      }
      return hoch ? hochschild_boundary(a, m, n) : harrison_boundary(a, m, n);
    };
    if (graded)
      c.tags = [a, m, hoch](int n) {
        return space_tags(a, &m, hoch ? mixed_tensor_space(a, m, n + 1) : harrison_chain_space(a, m, n + 1));
      };
  } else {
    c.cohomological = true;
    c.d = [a, m, hoch](int n) {
      if (n < 0) return SparseMap(m.dim(), 0);
      return hoch ? hochschild_cohomology_coboundary(a, m, n) : harrison_cohomology_coboundary(a, m, n);
    };
    if (graded)
      c.tags = [a, m, hoch](int n) {
        const WordSpace src = n == 0 ? WordSpace({Letters{}}) : hoch ? tensor_space(a, n) : harrison_chain_space(a, n);
        return word_cochain_degrees(a, m, src);
      };
  }
  fill(report, c, job.jobs);
  return report;
}

BettiReport run_chevalley(const JobConfig& job, const AlgebraPresentation& g,
                          const std::optional<ModulePresentation>& module) {
  require_kind(g.kind == Kind::lie, job.theory, "a lie algebra");
  const ModulePresentation m = module ? *module : catalog::trivial_module(g, 1, 0);
  const bool graded = is_graded(g, &m);
  BettiReport report;
  Complex c;
  c.first = 0;
  c.last = job.max_weight;
  c.note = module ? "module" : "trivial module";
  if (job.direction == "homology") {
    c.d = [g, m](int n) { return chevalley_boundary(g, m, n); };
    if (graded) c.tags = [g, m](int n) { return word_tags(g, &m, sym_basis(g, m, n)); };
  } else {
    c.cohomological = true;
    c.d = [g, m](int n) { return n < 0 ? SparseMap(m.dim(), 0) : chevalley_cohomology_coboundary(g, m, n); };
    if (graded) c.tags = [g, m](int n) { return sym_cochain_degrees(g, m, n); };
  }
  fill(report, c, job.jobs);
  return report;
}

BettiReport run_ginfty(const JobConfig& job, const AlgebraPresentation& g,
                       const std::optional<ModulePresentation>& module) {
  require_kind(g.kind == Kind::gerstenhaber, job.theory, "a gerstenhaber algebra");
  const ModulePresentation m = module ? *module : catalog::regular_module(g);
  const int n_max = job.max_weight;
  BettiReport report;
  if (job.direction == "verify") {
    const GinftyAlgebra pure(g, nullptr, n_max);
    for (const auto& v : ginfty_properties(pure, n_max))
      report.check(v.name, v.holds, v.holds ? "" : "first failure at weight " + std::to_string(v.first_failure_weight));
    bool square = true;
    for (int n = 2; n <= n_max; ++n)
      if (!(ginfty_boundary(pure, n - 1) * ginfty_boundary(pure, n)).is_zero()) square = false;
    report.check("(m + l)^2 = 0 on C_N(G)", square);
  }
  const auto a = std::make_shared<const GinftyAlgebra>(g, &m, n_max + 1);
  const bool graded = is_graded(g, &m);
  Complex c;
  c.note = module ? "module" : "regular module";
  if (job.direction != "cohomology") {
    c.first = 0;
    c.last = n_max;
    c.d = [a](int n) {
      return n == 0 ? SparseMap(0, a->module_chain_basis(0).size()) : chevalley_harrison_boundary(*a, n);
    };
    if (graded)
      c.tags = [a](int n) {
        std::vector<int> t;
        for (const auto& w : a->module_chain_basis(n)) t.push_back(a->degree(w));
        return t;
      };
    fill(report, c, job.jobs);
  }
  if (job.direction != "homology") {
    Complex k;
    k.note = c.note + ", cochains";
    k.cohomological = true;
    k.first = 1;
    k.last = n_max;
    k.d = [a, dm = m.dim()](int n) {
      return n < 1 ? SparseMap(a->chain_basis(1).size() * dm, 0) : chevalley_harrison_coboundary(*a, n);
    };
    if (graded) k.tags = [a](int n) { return ginfty_cochain_degrees(*a, n); };
    fill(report, k, job.jobs);
  }
  return report;
}

}  // namespace

int jobs_from_env() {
  const char* s = std::getenv("ENVELOPE_JOBS");
  if (!s) return 1;
  try {
    const int j = std::stoi(s);
    return j >= 1 ? j : 1;
  } catch (...) {
    return 1;
  }
}

BettiReport run(const JobConfig& job, const AlgebraPresentation& a, const std::optional<ModulePresentation>& m) {
  if (job.max_weight < 1) throw Error(ErrorCode::InvalidInput, "max weight must be at least 1");
  if (job.direction != "homology" && job.direction != "cohomology" && job.direction != "verify")
    throw Error(ErrorCode::InvalidInput, "unknown direction " + job.direction);
  BettiReport report;
  if (job.theory == "hochschild" || job.theory == "harrison") {
    if (job.direction == "verify") throw Error(ErrorCode::InvalidInput, "verify is for koszul and ginfty");
    report = run_word_theory(job, a, m);
  } else if (job.theory == "chevalley") {
    if (job.direction == "verify") throw Error(ErrorCode::InvalidInput, "verify is for koszul and ginfty");
    report = run_chevalley(job, a, m);
  } else if (job.theory == "koszul") {
    require_kind(a.kind == Kind::lie, job.theory, "a lie algebra");
    report = verify_resolution(a, job.max_weight);
  } else if (job.theory == "ginfty") {
    report = run_ginfty(job, a, m);
  } else {
    throw Error(ErrorCode::InvalidInput, "unknown theory " + job.theory);
  }
  report.theory = job.theory;
  report.direction = job.direction;
  report.input = job.input;
  return report;
}

BettiReport run(const JobConfig& job) {
  const AlgebraPresentation a = load_algebra(job.input);
  std::optional<ModulePresentation> m;
  if (!job.module_path.empty()) m = load_module(job.module_path, a);
  return run(job, a, m);
}

int exit_code_for(const BettiReport& report) { return report.all_passed() ? 0 : 3; }

namespace {

int code_for(const Error& e) {
  switch (e.code()) {
    case ErrorCode::ParseError:
    case ErrorCode::IoError:
      return 4;
    case ErrorCode::CompositeNotZero:
    case ErrorCode::QuotientNotPreserved:
      return 3;
    default:
      return 2;
  }
}

void emit(const BettiReport& report, const std::string& output, std::ostream& out) {
  out << report.to_table();
  if (!output.empty()) {
    std::ofstream f(output);
    if (!f) throw Error(ErrorCode::IoError, "cannot write " + output);
    f << report.to_json();
  }
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Homology of algebras from structure constants"};
  app.require_subcommand(1);

  std::string file, module_path, output;
  JobConfig job;
  job.jobs = jobs_from_env();

  auto* validate_cmd = app.add_subcommand("validate", "check a presentation against its axioms");
  validate_cmd->add_option("file", file, "algebra file")->required();
  validate_cmd->add_option("--module", module_path, "module file");

  const std::vector<std::string> theories{"hochschild", "harrison", "chevalley", "koszul", "ginfty"};
  auto add_job = [&](const std::string& name, const std::string& help) {
    auto* cmd = app.add_subcommand(name, help);
    cmd->add_option("--theory", job.theory, "theory")->required()->check(CLI::IsMember(theories));
    cmd->add_option("--max-weight", job.max_weight, "largest weight")->check(CLI::PositiveNumber);
    cmd->add_option("--module", module_path, "module file");
    cmd->add_option("file", file, "algebra file")->required();
    cmd->add_option("-o,--output", output, "JSON report");
    return cmd;
  };
  auto* homology_cmd = add_job("homology", "Betti numbers of the chain complex");
  auto* cohomology_cmd = add_job("cohomology", "Betti numbers of the cochain complex");

  int pmax = 3;
  auto* koszul_cmd = app.add_subcommand("koszul-verify", "exactness of the Koszul resolution");
  koszul_cmd->add_option("--pmax", pmax, "filtration cap")->check(CLI::PositiveNumber);
  koszul_cmd->add_option("file", file, "lie algebra file")->required();
  koszul_cmd->add_option("-o,--output", output, "JSON report");

  int ginfty_weight = 3;
  auto* ginfty_cmd = app.add_subcommand("ginfty-verify", "G-infinity laws and the Chevalley-Harrison complexes");
  ginfty_cmd->add_option("--max-weight", ginfty_weight, "largest weight")->check(CLI::PositiveNumber);
  ginfty_cmd->add_option("--module", module_path, "module file");
  ginfty_cmd->add_option("file", file, "gerstenhaber algebra file")->required();
  ginfty_cmd->add_option("-o,--output", output, "JSON report");

  unsigned seed = 0;
  auto* self_cmd = app.add_subcommand("selftest", "seeded property suite");
  self_cmd->add_option("--seed", seed, "random seed");
  self_cmd->add_option("-o,--output", output, "JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << e.what() << "\n";
    return 4;
  }

  try {
    if (validate_cmd->parsed()) {
      const AlgebraPresentation a = load_algebra(file);
      out << "valid " << to_string(a.kind) << " presentation, dim " << a.dim() << "\n";
      if (!module_path.empty()) {
        const ModulePresentation m = load_module(module_path, a);
        out << "valid module, dim " << m.dim() << "\n";
      }
      return 0;
    }
    if (self_cmd->parsed()) {
      const BettiReport r = selftest(seed, job.jobs);
      emit(r, output, out);
      return exit_code_for(r);
    }
    job.input = file;
    job.module_path = module_path;
    job.output = output;
    if (homology_cmd->parsed()) {
      job.direction = "homology";
    } else if (cohomology_cmd->parsed()) {
      job.direction = "cohomology";
    } else if (koszul_cmd->parsed()) {
      job.theory = "koszul";
      job.direction = "verify";
      job.max_weight = pmax;
    } else if (ginfty_cmd->parsed()) {
      job.theory = "ginfty";
      job.direction = "verify";
      job.max_weight = ginfty_weight;
    }
    const BettiReport r = run(job);
    emit(r, output, out);
    if (job.theory == "koszul" && r.all_passed()) out << "resolution verified in valid range\n";
    return exit_code_for(r);
  } catch (const Error& e) {
    err << e.what() << "\n";
    return code_for(e);
  }
}

}  // namespace envelope
