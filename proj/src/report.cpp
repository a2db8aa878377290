#include "fpselberg/verify.hpp"

#include <json.hpp>

#include <iomanip>
#include <ostream>

namespace fpselberg {

namespace {

void write_json(std::ostream& os, const VerificationReport& report) {
  nlohmann::ordered_json doc;
  doc["schema"] = 1;
  doc["ok"] = report.ok();
  doc["total_failed"] = report.total_failed();
  doc["total_seconds"] = report.total_seconds;
  auto& suites = doc["suites"] = nlohmann::ordered_json::array();
  for (const auto& s : report.suites)
    suites.push_back({{"name", to_string(s.suite)},
                      {"checked", s.checked},
                      {"passed", s.passed},
                      {"failed", s.failed},
                      {"skipped", s.skipped},
                      {"seconds", s.seconds}});
  auto& golden = doc["golden"] = nlohmann::ordered_json::array();
  for (const auto& g : report.golden)
    golden.push_back({{"p", g.p},
                      {"a", g.a},
                      {"b", g.b},
                      {"c", g.c},
                      {"l1", g.l1},
                      {"l2", g.l2},
                      {"oracle", g.oracle},
                      {"bruteforce", g.bruteforce},
                      {"closed", g.closed},
                      {"paper_value", g.paper_value},
                      {"paper_discrepancy", g.paper_discrepancy}});
  auto& ces = doc["counterexamples"] = nlohmann::ordered_json::array();
  for (const auto& ce : report.counterexamples)
    ces.push_back({{"suite", ce.suite},
                   {"p", ce.p},
                   {"a", ce.a},
                   {"b", ce.b},
                   {"c", ce.c},
                   {"l1", ce.l1},
                   {"l2", ce.l2},
                   {"branch", ce.branch},
                   {"expected", ce.expected},
                   {"got", ce.got},
                   {"detail", ce.detail}});
  os << doc.dump(2) << '\n';
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char ch : s) {
    if (ch == '"') out += '"';
    out += ch;
  }
  return out + '"';
}

void write_csv(std::ostream& os, const VerificationReport& report) {
  os << "suite,checked,passed,failed,skipped,seconds\n";
  for (const auto& s : report.suites)
    os << to_string(s.suite) << ',' << s.checked << ',' << s.passed << ',' << s.failed << ','
       << s.skipped << ',' << std::fixed << std::setprecision(3) << s.seconds << '\n';
  if (!report.golden.empty()) {
    os << "\np,a,b,c,l1,l2,oracle,bruteforce,closed,paper_value,paper_discrepancy\n";
    for (const auto& g : report.golden)
      os << g.p << ',' << g.a << ',' << g.b << ',' << g.c << ',' << g.l1 << ',' << g.l2 << ','
         << g.oracle << ',' << g.bruteforce << ',' << g.closed << ',' << g.paper_value << ','
         << (g.paper_discrepancy ? "true" : "false") << '\n';
  }
  if (!report.counterexamples.empty()) {
    os << "\nsuite,p,a,b,c,l1,l2,branch,expected,got,detail\n";
    for (const auto& ce : report.counterexamples)
      os << ce.suite << ',' << ce.p << ',' << ce.a << ',' << ce.b << ',' << ce.c << ','
         << ce.l1 << ',' << ce.l2 << ',' << csv_field(ce.branch) << ','
         << csv_field(ce.expected) << ',' << csv_field(ce.got) << ',' << csv_field(ce.detail)
         << '\n';
  }
}

void write_text(std::ostream& os, const VerificationReport& report) {
  for (const auto& s : report.suites)
    os << std::left << std::setw(13) << to_string(s.suite) << " checked=" << s.checked
       << " passed=" << s.passed << " failed=" << s.failed << " skipped=" << s.skipped << " ("
       << std::fixed << std::setprecision(2) << s.seconds << " s)\n";
  for (const auto& g : report.golden) {
    os << "golden p=" << g.p << " (" << g.a << ',' << g.b << ',' << g.c << ") [" << g.l1 << ','
       << g.l2 << "]: bruteforce=" << g.bruteforce << " closed=" << g.closed
       << " oracle=" << g.oracle;
    if (g.paper_discrepancy)
      os << "  [paper_discrepancy: reference value " << g.paper_value << ']';
    os << '\n';
  }
  for (const auto& ce : report.counterexamples)
    os << "FAIL " << ce.suite << " p=" << ce.p << " (" << ce.a << ',' << ce.b << ',' << ce.c
       << ") [" << ce.l1 << ',' << ce.l2 << "] " << ce.branch << " expected=" << ce.expected
       << " got=" << ce.got << " : " << ce.detail << '\n';
  os << (report.ok() ? "OK" : "FAILED") << " (" << report.total_failed() << " failures, "
     << std::fixed << std::setprecision(2) << report.total_seconds << " s)\n";
}

} // namespace

void write_report(std::ostream& os, const VerificationReport& report, OutputFormat format) {
  switch (format) {
  case OutputFormat::Json: write_json(os, report); break;
  case OutputFormat::Csv: write_csv(os, report); break;
  case OutputFormat::Text: write_text(os, report); break;
  }
}

} // namespace fpselberg
