#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "vesicle/phase.hpp"

namespace vesicle {

enum class Parameter { C, S, Q };

std::string_view to_string(Parameter p);

/// One swept parameter: `count` points from min to max, linear or geometric.
struct Axis {
  Parameter parameter = Parameter::C;
  double min = 0.0;
  double max = 0.0;
  int count = 2;
  bool log = false;

  std::vector<double> values() const;
};

/// Parses "min:max:count" or "min:max:count:log". Throws DomainError.
Axis parse_axis(Parameter p, std::string_view text);

enum class OutputFormat { Csv, Json };

struct SweepSpec {
  std::vector<Axis> axes;  // at most two, distinct parameters; first is the outer loop
  double c = 1.0, s = 1.0, q = 1.0;  // values of the parameters not swept
  OutputFormat format = OutputFormat::Csv;
  unsigned jobs = 0;  // 0 = hardware concurrency
};

/// Throws DomainError on repeated axes, more than two axes, count < 2,
/// non-positive bounds or a log axis with min <= 0.
void validate(const SweepSpec& spec);

struct SweepRow {
  double c = 0.0, s = 0.0, q = 0.0;
  std::optional<SingularityResult> singularity;
  std::optional<Densities> densities;
  std::string error;  // empty when the point evaluated cleanly
};

/// Evaluates classify() and densities() at one point, catching library errors
/// into the row's error field.
SweepRow evaluate_point(double c, double s, double q);

/// All grid points in deterministic order (outer axis first), evaluated on a
/// pool of spec.jobs threads.
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

/// Header c,s,q,t_c,kind,phase,contacts,area,error and one row per point.
/// Missing values are written as NA; commas and newlines in error text are
/// replaced so rows need no quoting.
void write_csv(std::ostream& out, const std::vector<SweepRow>& rows);

/// JSON array of row objects; missing values are null.
void write_json(std::ostream& out, const std::vector<SweepRow>& rows);

/// Shortest decimal form that round-trips to the same double.
std::string format_double(double v);

}  // namespace vesicle
