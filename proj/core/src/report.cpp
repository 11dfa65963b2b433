#include "dgt/report.hpp"

#include <map>
#include <sstream>
#include <vector>

namespace dgt {

namespace {

std::string quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out.push_back('\\');
    out.push_back(c);
  }
  out.push_back('"');
  return out;
}

std::map<std::string, std::string> parse_block(const std::string& text) {
  std::map<std::string, std::string> kv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    auto eq = line.find('=');
    if (eq == std::string::npos) continue;
    auto trim = [](std::string s) {
      std::size_t b = s.find_first_not_of(" \t{}");
      std::size_t e = s.find_last_not_of(" \t{}\r");
      if (b == std::string::npos) return std::string{};
      return s.substr(b, e - b + 1);
    };
    std::string key = trim(line.substr(0, eq));
    std::string val = trim(line.substr(eq + 1));
    if (!val.empty() && val.front() == '"' && val.back() == '"' && val.size() >= 2) {
      std::string unq;
      for (std::size_t i = 1; i + 1 < val.size(); ++i) {
        if (val[i] == '\\' && i + 2 < val.size()) ++i;
        unq.push_back(val[i]);
      }
      val = unq;
    }
    kv[key] = val;
  }
  return kv;
}

std::vector<std::size_t> parse_index_list(const std::string& s) {
  std::vector<std::size_t> out;
  std::string cur;
  for (char c : s) {
    if (std::isdigit(static_cast<unsigned char>(c))) {
      cur.push_back(c);
    } else if (!cur.empty()) {
      out.push_back(std::stoull(cur));
      cur.clear();
    }
  }
  if (!cur.empty()) out.push_back(std::stoull(cur));
  return out;
}

std::string index_list(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << "[";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << v[i];
  out << "]";
  return out.str();
}

}  // namespace

std::string serialize_verdict(const Verdict& v) {
  std::ostringstream out;
  out << "verdict {\n";
  out << "  value = " << to_string(v.value) << "\n";
  if (v.positive_cert) {
    out << "  stage = " << v.positive_cert->stage << "\n";
    out << "  product = " << quote(to_string(v.positive_cert->product)) << "\n";
  }
  if (v.multiplier) out << "  multiplier = " << v.multiplier->str() << "\n";
  if (v.trace_witness) {
    const char* kind = v.trace_witness->kind == TraceWitness::Kind::Point   ? "point"
                       : v.trace_witness->kind == TraceWitness::Kind::Zero ? "zero"
                                                                           : "infty";
    out << "  witness_kind = " << kind << "\n";
    if (v.trace_witness->kind == TraceWitness::Kind::Point)
      out << "  witness_point = " << to_string(v.trace_witness->point) << "\n";
    out << "  witness_value = " << to_string(v.trace_witness->value) << "\n";
  }
  if (v.cap_reached) out << "  cap = " << *v.cap_reached << "\n";
  out << "}\n";
  return out.str();
}

Verdict parse_verdict(const std::string& text) {
  auto kv = parse_block(text);
  Verdict v;
  const std::string& val = kv.at("value");
  v.value = val == "true" ? Truth::True : (val == "false" ? Truth::False : Truth::Unknown);
  if (kv.count("stage")) {
    PositivityCertificate cert;
    cert.stage = std::stoull(kv.at("stage"));
    cert.product = kv.count("product") ? parse_poly(kv.at("product")) : LaurentPoly{};
    v.positive_cert = std::move(cert);
  }
  if (kv.count("multiplier")) v.multiplier = Int(kv.at("multiplier"));
  if (kv.count("witness_kind")) {
    TraceWitness w;
    const std::string& k = kv.at("witness_kind");
    w.kind = k == "point" ? TraceWitness::Kind::Point
                          : (k == "zero" ? TraceWitness::Kind::Zero : TraceWitness::Kind::Infty);
    if (kv.count("witness_point")) w.point = parse_rat(kv.at("witness_point"));
    w.value = parse_rat(kv.at("witness_value"));
    v.trace_witness = std::move(w);
  }
  if (kv.count("cap")) v.cap_reached = std::stoull(kv.at("cap"));
  return v;
}

bool verdict_equal(const Verdict& a, const Verdict& b) {
  if (a.value != b.value) return false;
  if (a.positive_cert.has_value() != b.positive_cert.has_value()) return false;
  if (a.positive_cert &&
      (a.positive_cert->stage != b.positive_cert->stage ||
       !(a.positive_cert->product == b.positive_cert->product)))
    return false;
  if (a.multiplier != b.multiplier) return false;
  if (a.trace_witness.has_value() != b.trace_witness.has_value()) return false;
  if (a.trace_witness) {
    if (a.trace_witness->kind != b.trace_witness->kind) return false;
    if (a.trace_witness->kind == TraceWitness::Kind::Point &&
        a.trace_witness->point != b.trace_witness->point)
      return false;
    if (a.trace_witness->value != b.trace_witness->value) return false;
  }
  return a.cap_reached == b.cap_reached;
}

namespace {

void emit_condition(std::ostringstream& out, const char* name, const ConditionVerdict& c) {
  out << "  " << name << " = " << (c.holds ? "true" : "false") << "\n";
  out << "  " << name << "_evidence = " << index_list(c.evidence) << "\n";
}

ConditionVerdict read_condition(const std::map<std::string, std::string>& kv,
                                const std::string& name, bool prefix_relative) {
  ConditionVerdict c;
  c.holds = kv.at(name) == "true";
  c.evidence = parse_index_list(kv.at(name + "_evidence"));
  c.prefix_relative = prefix_relative;
  return c;
}

}  // namespace

std::string serialize_cert_report(const CertReport& r) {
  std::ostringstream out;
  out << "certify {\n";
  out << "  classification = " << to_string(r.classification) << "\n";
  out << "  prefix_relative = " << (r.prefix_relative ? "true" : "false") << "\n";
  emit_condition(out, "terminal_coeff", r.terminal_coeff);
  emit_condition(out, "leading_coeff", r.leading_coeff);
  emit_condition(out, "content_one", r.content_one);
  emit_condition(out, "isolani_free", r.isolani_free);
  emit_condition(out, "equal_logs", r.equal_logs);
  if (!r.note.empty()) out << "  note = " << quote(r.note) << "\n";
  out << "}\n";
  return out.str();
}

CertReport parse_cert_report(const std::string& text) {
  auto kv = parse_block(text);
  CertReport r;
  const std::string& c = kv.at("classification");
  r.classification = c == "AntiFD" ? Classification::AntiFD
                     : (c == "ProFD" ? Classification::ProFD : Classification::Inconclusive);
  r.prefix_relative = kv.at("prefix_relative") == "true";
  r.terminal_coeff = read_condition(kv, "terminal_coeff", r.prefix_relative);
  r.leading_coeff = read_condition(kv, "leading_coeff", r.prefix_relative);
  r.content_one = read_condition(kv, "content_one", r.prefix_relative);
  r.isolani_free = read_condition(kv, "isolani_free", r.prefix_relative);
  r.equal_logs = read_condition(kv, "equal_logs", r.prefix_relative);
  if (kv.count("note")) r.note = kv.at("note");
  return r;
}

bool cert_report_equal(const CertReport& a, const CertReport& b) {
  auto cond_eq = [](const ConditionVerdict& x, const ConditionVerdict& y) {
    return x.holds == y.holds && x.evidence == y.evidence;
  };
  return a.classification == b.classification && a.prefix_relative == b.prefix_relative &&
         cond_eq(a.terminal_coeff, b.terminal_coeff) &&
         cond_eq(a.leading_coeff, b.leading_coeff) && cond_eq(a.content_one, b.content_one) &&
         cond_eq(a.isolani_free, b.isolani_free) && cond_eq(a.equal_logs, b.equal_logs) &&
         a.note == b.note;
}

std::string describe_cert_report(const CertReport& r) {
  std::ostringstream out;
  auto line = [&](const char* label, const ConditionVerdict& c) {
    out << "  " << label << ": " << (c.holds ? "holds" : "fails");
    if (!c.evidence.empty()) out << "  evidence at entries " << index_list(c.evidence);
    if (!c.note.empty()) out << "  (" << c.note << ")";
    out << "\n";
  };
  out << "classification: " << to_string(r.classification)
      << (r.prefix_relative ? "  [prefix-relative: finite data]" : "") << "\n";
  line("(i)   terminal coefficient > 1 infinitely often", r.terminal_coeff);
  line("(ii)  leading coefficient > 1 infinitely often", r.leading_coeff);
  line("(iii) content 1 for almost all entries", r.content_one);
  line("(iv)a no leading/terminal isolani infinitely often", r.isolani_free);
  line("(iv)b an infinite equal-Log subfamily", r.equal_logs);
  if (!r.note.empty()) out << "note: " << r.note << "\n";
  return out.str();
}

std::string describe_verdict(const Verdict& v) {
  std::ostringstream out;
  out << to_string(v.value);
  if (v.multiplier) out << "  multiplier m = " << v.multiplier->str();
  if (v.positive_cert) {
    out << "  stabilizes at stage " << v.positive_cert->stage << " with product "
        << to_string(v.positive_cert->product);
  }
  if (v.trace_witness) {
    switch (v.trace_witness->kind) {
      case TraceWitness::Kind::Point:
        out << "  trace at t = " << to_string(v.trace_witness->point) << " is "
            << to_string(v.trace_witness->value);
        break;
      case TraceWitness::Kind::Zero:
        out << "  endpoint trace at 0 is " << to_string(v.trace_witness->value);
        break;
      case TraceWitness::Kind::Infty:
        out << "  endpoint trace at infinity is " << to_string(v.trace_witness->value);
        break;
    }
  }
  if (v.cap_reached) out << "  (search cap " << *v.cap_reached << ")";
  return out.str();
}

}  // namespace dgt
