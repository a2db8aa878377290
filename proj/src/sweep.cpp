#include "fpselberg/sweep.hpp"

#include "fpselberg/errors.hpp"
#include "fpselberg/parallel.hpp"
#include "fpselberg/selberg.hpp"

#include <json.hpp>

#include <ostream>
#include <string>

namespace fpselberg {

std::string_view to_string(Method method) {
  switch (method) {
  case Method::Bruteforce: return "bruteforce";
  case Method::Direct: return "direct";
  case Method::Closed: return "closed";
  }
  return "?";
}

Method parse_method(std::string_view name) {
  if (name == "bruteforce") return Method::Bruteforce;
  if (name == "direct") return Method::Direct;
  if (name == "closed") return Method::Closed;
  throw DomainError("unknown method '" + std::string(name) + "'");
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
  case OutputFormat::Json: return "json";
  case OutputFormat::Csv: return "csv";
  case OutputFormat::Text: return "text";
  }
  return "?";
}

OutputFormat parse_format(std::string_view name) {
  if (name == "json") return OutputFormat::Json;
  if (name == "csv") return OutputFormat::Csv;
  if (name == "text") return OutputFormat::Text;
  throw DomainError("unknown format '" + std::string(name) + "'");
}

void validate(const SweepOptions& options) {
  if (options.primes.empty()) throw DomainError("prime list is empty");
  for (auto p : options.primes)
    if (p == 2 || !is_prime(p)) throw DomainError(std::to_string(p) + " is not an odd prime");
  if (options.cycle_bound == 0) throw DomainError("cycle bound must be at least 1");
}

std::size_t expected_row_count(const SweepOptions& options) {
  const std::size_t cycles = std::size_t{options.cycle_bound} * (options.cycle_bound + 1) / 2;
  std::size_t total = 0;
  for (auto p : options.primes) total += std::size_t{p - 1} * (p - 1) * (p - 1) * cycles;
  return total;
}

std::vector<SweepRow> run_sweep(const SweepOptions& options) {
  validate(options);

  // One work item per (p, a); each fills its own block.
  struct Item {
    std::uint32_t p, a;
  };
  std::vector<Item> items;
  for (auto p : options.primes)
    for (std::uint32_t a = 1; a < p; ++a) items.push_back({p, a});

  std::vector<FpContext> contexts;
  for (auto p : options.primes) contexts.emplace_back(p);
  auto context_for = [&](std::uint32_t p) -> const FpContext& {
    for (const auto& ctx : contexts)
      if (ctx.p() == p) return ctx;
    throw GuardError("missing context");
  };

  std::vector<std::vector<SweepRow>> blocks(items.size());
  parallel_for(items.size(), options.jobs, [&](std::size_t i) {
    const auto [p, a] = items[i];
    const FpContext& ctx = context_for(p);
    auto& block = blocks[i];
    for (std::uint32_t b = 1; b < p; ++b) {
      for (std::uint32_t c = 1; c < p; ++c) {
        const SelbergParams params(p, a, b, c);
        const ConditionSet set = condition_set(params);
        std::optional<FpPoly> phi;
        if (options.method == Method::Bruteforce)
          phi = master_polynomial(MasterPolySpec(2, params), p);
        for (std::uint32_t l1 = 1; l1 <= options.cycle_bound; ++l1) {
          for (std::uint32_t l2 = l1; l2 <= options.cycle_bound; ++l2) {
            Fp value;
            switch (options.method) {
            case Method::Bruteforce: value = fp_integral(*phi, Cycle{l1, l2}); break;
            case Method::Direct: value = selberg_direct_2d(ctx, params, l1, l2); break;
            case Method::Closed: value = eval_closed(ctx, params, l1, l2); break;
            }
            block.push_back({p, a, b, c, l1, l2, classify(params, l1, l2), value,
                             set == ConditionSet::R1, set == ConditionSet::R2,
                             set == ConditionSet::R3});
          }
        }
      }
    }
  });

  std::vector<SweepRow> rows;
  rows.reserve(expected_row_count(options));
  for (auto& block : blocks) rows.insert(rows.end(), block.begin(), block.end());
  return rows;
}

void write_sweep(std::ostream& os, const std::vector<SweepRow>& rows, OutputFormat format) {
  switch (format) {
  case OutputFormat::Csv:
    os << kSweepCsvHeader << '\n';
    for (const auto& r : rows)
      os << r.p << ',' << r.a << ',' << r.b << ',' << r.c << ',' << r.l1 << ',' << r.l2 << ','
         << to_string(r.tag.branch) << ',' << r.value.v << ',' << int(r.in_r1) << ','
         << int(r.in_r2) << ',' << int(r.in_r3) << '\n';
    break;
  case OutputFormat::Json: {
    nlohmann::ordered_json doc;
    doc["schema"] = 1;
    doc["row_count"] = rows.size();
    auto& out = doc["rows"] = nlohmann::ordered_json::array();
    for (const auto& r : rows)
      out.push_back({{"p", r.p}, {"a", r.a}, {"b", r.b}, {"c", r.c}, {"l1", r.l1},
                     {"l2", r.l2}, {"branch", to_string(r.tag.branch)}, {"value", r.value.v},
                     {"in_R1", r.in_r1}, {"in_R2", r.in_r2}, {"in_R3", r.in_r3}});
    os << doc.dump(2) << '\n';
    break;
  }
  case OutputFormat::Text:
    for (const auto& r : rows) {
      os << "p=" << r.p << " (a,b,c)=(" << r.a << ',' << r.b << ',' << r.c << ") ["
         << r.l1 << ',' << r.l2 << "] " << to_string(r.tag.branch) << " value=" << r.value.v;
      if (r.in_r1) os << " R1";
      if (r.in_r2) os << " R2";
      if (r.in_r3) os << " R3";
      os << '\n';
    }
    break;
  }
}

} // namespace fpselberg
