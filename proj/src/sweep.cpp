#include "vesicle/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <ostream>
#include <thread>

#include "json.hpp"
#include "vesicle/errors.hpp"
#include "vesicle/scaling.hpp"

namespace vesicle {

std::string_view to_string(Parameter p) {
  switch (p) {
    case Parameter::C: return "c";
    case Parameter::S: return "s";
    case Parameter::Q: return "q";
  }
  return "?";
}

std::vector<double> Axis::values() const {
  if (log) return geometric_grid(min, max, count);
  std::vector<double> v(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) v[i] = min + (max - min) * i / (count - 1);
  v.back() = max;
  return v;
}

namespace {

double parse_number(std::string_view text) {
  double v = 0.0;
  const auto* end = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(text.data(), end, v);
  if (ec != std::errc() || ptr != end) throw DomainError("not a number: '" + std::string(text) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = text.find(sep, start);
    parts.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) return parts;
    start = pos + 1;
  }
}

std::string sanitize(std::string text) {
  std::replace(text.begin(), text.end(), ',', ';');
  std::replace(text.begin(), text.end(), '\n', ' ');
  std::replace(text.begin(), text.end(), '\r', ' ');
  return text;
}

}  // namespace

Axis parse_axis(Parameter p, std::string_view text) {
  const auto parts = split(text, ':');
  if (parts.size() != 3 && parts.size() != 4) {
    throw DomainError("axis '" + std::string(text) + "' must be min:max:count[:log]");
  }
  Axis a;
  a.parameter = p;
  a.min = parse_number(parts[0]);
  a.max = parse_number(parts[1]);
  const double count = parse_number(parts[2]);
  if (count != std::floor(count) || count < 2 || count > 1e7) throw DomainError("axis count must be an integer >= 2");
  a.count = static_cast<int>(count);
  if (parts.size() == 4) {
    if (parts[3] != "log" && parts[3] != "lin") throw DomainError("axis spacing must be 'log' or 'lin'");
    a.log = parts[3] == "log";
  }
  return a;
}

void validate(const SweepSpec& spec) {
  if (spec.axes.empty() || spec.axes.size() > 2) throw DomainError("a sweep needs one or two axes");
  if (spec.axes.size() == 2 && spec.axes[0].parameter == spec.axes[1].parameter) {
    throw DomainError("sweep axes must be distinct parameters");
  }
  for (const Axis& a : spec.axes) {
    if (a.count < 2) throw DomainError("axis count must be >= 2");
    if (!(a.min > 0.0) || !(a.max > 0.0) || !std::isfinite(a.min) || !std::isfinite(a.max)) {
      throw DomainError(std::string("axis ") + std::string(to_string(a.parameter)) + " must have positive bounds");
    }
  }
  require_positive_fugacities(spec.c, spec.s, spec.q);
}

SweepRow evaluate_point(double c, double s, double q) {
  SweepRow row{c, s, q, std::nullopt, std::nullopt, {}};
  try {
    row.singularity = classify(c, s, q);
    row.densities = densities(c, s, q);
  } catch (const Error& e) {
    row.error = e.what();
  }
  return row;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
  validate(spec);
  std::vector<std::vector<double>> grids;
  for (const Axis& a : spec.axes) grids.push_back(a.values());

  struct Point {
    double c, s, q;
  };
  std::vector<Point> points;
  const std::size_t inner = grids.size() == 2 ? grids[1].size() : 1;
  for (std::size_t i = 0; i < grids[0].size(); ++i) {
    for (std::size_t j = 0; j < inner; ++j) {
      Point p{spec.c, spec.s, spec.q};
      for (std::size_t k = 0; k < grids.size(); ++k) {
        const double v = grids[k][k == 0 ? i : j];
        switch (spec.axes[k].parameter) {
          case Parameter::C: p.c = v; break;
          case Parameter::S: p.s = v; break;
          case Parameter::Q: p.q = v; break;
        }
      }
      points.push_back(p);
    }
  }

  std::vector<SweepRow> rows(points.size());
  unsigned jobs = spec.jobs ? spec.jobs : std::max(1u, std::thread::hardware_concurrency());
  jobs = static_cast<unsigned>(std::min<std::size_t>(jobs, points.size()));
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next.fetch_add(1)) < points.size();) {
      rows[i] = evaluate_point(points[i].c, points[i].s, points[i].q);
    }
  };
  std::vector<std::thread> pool;
  for (unsigned k = 1; k < jobs; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  return rows;
}

std::string format_double(double v) {
  char buf[32];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
  if (ec != std::errc()) return "NA";
  return std::string(buf, ptr);
}

void write_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
  out << "c,s,q,t_c,kind,phase,contacts,area,error\n";
  for (const SweepRow& r : rows) {
    out << format_double(r.c) << ',' << format_double(r.s) << ',' << format_double(r.q) << ',';
    if (r.singularity) {
      out << format_double(r.singularity->t_c) << ',' << to_string(r.singularity->kind) << ','
          << to_string(r.singularity->phase) << ',';
    } else {
      out << "NA,NA,NA,";
    }
    if (r.densities) {
      out << format_double(r.densities->contacts) << ','
          << (r.densities->area ? format_double(*r.densities->area) : "NA") << ',';
    } else {
      out << "NA,NA,";
    }
    out << sanitize(r.error) << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<SweepRow>& rows) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const SweepRow& r : rows) {
    nlohmann::ordered_json j;
    j["c"] = r.c;
    j["s"] = r.s;
    j["q"] = r.q;
    j["t_c"] = r.singularity ? nlohmann::ordered_json(r.singularity->t_c) : nullptr;
    j["kind"] = r.singularity ? nlohmann::ordered_json(to_string(r.singularity->kind)) : nullptr;
    j["phase"] = r.singularity ? nlohmann::ordered_json(to_string(r.singularity->phase)) : nullptr;
    j["contacts"] = r.densities ? nlohmann::ordered_json(r.densities->contacts) : nullptr;
    j["area"] = r.densities && r.densities->area ? nlohmann::ordered_json(*r.densities->area) : nullptr;
    j["error"] = r.error.empty() ? nullptr : nlohmann::ordered_json(r.error);
    arr.push_back(std::move(j));
  }
  out << arr.dump(2) << '\n';
}

}  // namespace vesicle
