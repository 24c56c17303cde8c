#include "mgc/optimizer.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "mgc/errors.hpp"

namespace mgc {

void SearchConfig::validate() const {
  if (n_samples < 1) throw InvalidInput("n_samples must be >= 1");
  if (n_starts < 1) throw InvalidInput("n_starts must be >= 1");
  if (initial_step <= 0.0) throw InvalidInput("initial_step must be > 0");
  if (step_tolerance <= 0.0) throw InvalidInput("step_tolerance must be > 0");
  if (step_tolerance >= initial_step)
    throw InvalidInput("step_tolerance must be smaller than initial_step");
  if (contraction <= 0.0 || contraction >= 1.0)
    throw InvalidInput("contraction must lie in (0,1)");
  if (lambda < 0.0) throw InvalidInput("lambda must be >= 0");
  if (steepness <= 0.0) throw InvalidInput("steepness must be > 0");
}

SearchConfig parse_config_text(const std::string& text) {
  SearchConfig cfg;
  std::istringstream in(text);
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    line = line.substr(first, last - first + 1);
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw InvalidInput("config line " + std::to_string(line_no) +
                         ": expected key=value");
    const std::string key = line.substr(0, eq);
    const std::string value = line.substr(eq + 1);
    try {
      if (key == "seed")
        cfg.seed = std::stoull(value);
      else if (key == "n_samples")
        cfg.n_samples = std::stoi(value);
      else if (key == "n_starts")
        cfg.n_starts = std::stoi(value);
      else if (key == "initial_step")
        cfg.initial_step = std::stod(value);
      else if (key == "step_tolerance")
        cfg.step_tolerance = std::stod(value);
      else if (key == "max_evaluations")
        cfg.max_evaluations = std::stol(value);
      else if (key == "contraction")
        cfg.contraction = std::stod(value);
      else if (key == "lambda")
        cfg.lambda = std::stod(value);
      else if (key == "steepness")
        cfg.steepness = std::stod(value);
      else
        throw InvalidInput("config line " + std::to_string(line_no) +
                           ": unknown key '" + key + "'");
    } catch (const std::invalid_argument&) {
      throw InvalidInput("config line " + std::to_string(line_no) +
                         ": bad value for '" + key + "'");
    }
  }
  cfg.validate();
  return cfg;
}

SearchConfig load_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config_text(buf.str());
}

std::string dump_config(const SearchConfig& cfg) {
  std::ostringstream out;
  out << "seed=" << cfg.seed << "\n"
      << "n_samples=" << cfg.n_samples << "\n"
      << "n_starts=" << cfg.n_starts << "\n"
      << "initial_step=" << cfg.initial_step << "\n"
      << "step_tolerance=" << cfg.step_tolerance << "\n"
      << "max_evaluations=" << cfg.max_evaluations << "\n"
      << "contraction=" << cfg.contraction << "\n"
      << "lambda=" << cfg.lambda << "\n"
      << "steepness=" << cfg.steepness << "\n";
  return out.str();
}

namespace {

Vector project(const Vector& x, const Domain& domain) {
  if (domain.kind == Domain::Kind::sphere) {
    const double norm = x.norm();
    if (norm <= 1e-12) return x;  // caller skips unprojectable candidates
    return x / norm;
  }
  return x.cwiseMax(domain.lo).cwiseMin(domain.hi);
}

std::string point_to_string(const Vector& x) {
  std::ostringstream out;
  out << "(";
  for (Eigen::Index i = 0; i < x.size(); ++i)
    out << (i ? ", " : "") << x[i];
  out << ")";
  return out.str();
}

double checked_eval(const Objective& f, const Vector& x) {
  const double v = f(x);
  if (std::isnan(v))
    throw InvalidInput("objective returned NaN at " + point_to_string(x));
  return v;
}

}  // namespace

SearchResult pattern_search(const Objective& f, const Vector& start,
                            const Domain& domain, const SearchConfig& cfg,
                            long budget_override) {
  cfg.validate();
  const long budget =
      budget_override >= 0 ? budget_override : cfg.max_evaluations;
  if (budget <= 0) throw InvalidInput("pattern search needs a positive budget");
  const int d = static_cast<int>(start.size());
  if (d < 1) throw InvalidInput("pattern search needs dimension >= 1");

  if (domain.kind == Domain::Kind::sphere && start.norm() <= 1e-12)
    throw InvalidInput("sphere start point cannot be projected (zero norm)");

  SearchResult res;
  res.best_point = project(start, domain);
  res.best_value = checked_eval(f, res.best_point);
  res.evaluations = 1;
  res.incumbent_trace.push_back(res.best_value);

  if (domain.kind == Domain::Kind::sphere && d == 1) {
    // The 1-d sphere is {-1,+1}; poll the only other point.
    if (res.evaluations < budget) {
      Vector other(1);
      other[0] = -res.best_point[0];
      const double v = checked_eval(f, other);
      ++res.evaluations;
      if (v > res.best_value) {
        res.best_value = v;
        res.best_point = other;
      }
      res.incumbent_trace.push_back(res.best_value);
      res.converged = true;
    }
    return res;
  }

  double step = cfg.initial_step;
  bool out_of_budget = false;
  while (step >= cfg.step_tolerance && !out_of_budget) {
    bool improved = false;
    for (int i = 0; i < d && !improved && !out_of_budget; ++i) {
      for (double sign : {+1.0, -1.0}) {
        if (res.evaluations >= budget) {
          out_of_budget = true;
          break;
        }
        Vector raw = res.best_point;
        raw[i] += sign * step;
        const Vector candidate = project(raw, domain);
        if ((candidate.array() == res.best_point.array()).all()) continue;
        if (domain.kind == Domain::Kind::sphere && candidate.norm() <= 1e-12)
          continue;
        const double v = checked_eval(f, candidate);
        ++res.evaluations;
        if (v > res.best_value) {
          res.best_value = v;
          res.best_point = candidate;
          improved = true;
        }
        res.incumbent_trace.push_back(res.best_value);
        if (improved) break;
      }
    }
    if (!improved && !out_of_budget) step *= cfg.contraction;
  }
  res.converged = step < cfg.step_tolerance;
  return res;
}

std::vector<Vector> multistart_start_points(int dim, const Domain& domain,
                                            const SearchConfig& cfg) {
  Rng rng(sub_seed(cfg.seed, 0x5741u));
  std::vector<Vector> starts;
  starts.reserve(static_cast<std::size_t>(cfg.n_starts));
  for (int s = 0; s < cfg.n_starts; ++s) {
    if (domain.kind == Domain::Kind::sphere) {
      starts.push_back(rng.unit_sphere(dim));
    } else {
      Vector v(dim);
      for (int i = 0; i < dim; ++i) v[i] = rng.uniform(domain.lo, domain.hi);
      starts.push_back(std::move(v));
    }
  }
  return starts;
}

SearchResult multistart(const Objective& f, int dim, const Domain& domain,
                        const SearchConfig& cfg,
                        const std::vector<Vector>& warm_starts) {
  cfg.validate();
  if (dim < 1) throw InvalidInput("multistart needs dimension >= 1");
  std::vector<Vector> starts = warm_starts;
  for (auto& s : multistart_start_points(dim, domain, cfg))
    starts.push_back(std::move(s));

  SearchResult best;
  best.best_value = -std::numeric_limits<double>::infinity();
  long used = 0;
  bool all_converged = true;
  for (const Vector& start : starts) {
    const long remaining = cfg.max_evaluations - used;
    if (remaining <= 0) {
      all_converged = false;
      break;
    }
    SearchResult r = pattern_search(f, start, domain, cfg, remaining);
    used += r.evaluations;
    all_converged &= r.converged;
    if (r.best_value > best.best_value) {
      best.best_point = r.best_point;
      best.best_value = r.best_value;
      best.incumbent_trace = std::move(r.incumbent_trace);
    }
  }
  best.evaluations = used;
  best.converged = all_converged;
  return best;
}

}  // namespace mgc
