#include "eulerchi/report.hpp"

#include <json.hpp>

#include <sstream>

namespace eulerchi {

using Json = nlohmann::ordered_json;

namespace {

std::string weight_str(const Weight& w) {
  std::ostringstream out;
  out << "(";
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) out << ",";
    out << w[i];
  }
  out << ")";
  return out.str();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += "\"";
  return out;
}

std::string csv_row(const std::vector<std::string>& cells) {
  std::string out;
  for (size_t i = 0; i < cells.size(); ++i) {
    if (i) out += ",";
    out += csv_cell(cells[i]);
  }
  out += "\n";
  return out;
}

std::string md_row(const std::vector<std::string>& cells) {
  std::string out = "|";
  for (const auto& c : cells) {
    out += " " + c + " |";
  }
  out += "\n";
  return out;
}

std::string md_table(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::string out = md_row(header);
  std::vector<std::string> rule(header.size(), "---");
  out += md_row(rule);
  for (const auto& r : rows) out += md_row(r);
  return out;
}

std::string csv_table(const std::vector<std::string>& header,
                      const std::vector<std::vector<std::string>>& rows) {
  std::string out = csv_row(header);
  for (const auto& r : rows) out += csv_row(r);
  return out;
}

Json rational_json(const Rational& r) {
  return Json{{"num", numerator(r).str()}, {"den", denominator(r).str()}};
}

}  // namespace

Format parse_format(const std::string& s) {
  if (s == "md") return Format::Md;
  if (s == "json") return Format::Json;
  if (s == "csv") return Format::Csv;
  throw std::invalid_argument("format must be one of md, json, csv");
}

std::string render_chi(const ChiResult& result, Format fmt, bool breakdown) {
  const bool gamma = result.p.has_value();
  if (fmt == Format::Json) {
    Json doc;
    doc["group"] = group_name(result.group);
    doc["m"] = result.m;
    if (result.p) doc["p"] = *result.p;
    doc["weight"] = result.weight;
    doc["chi"] = rational_json(result.chi);
    if (result.sigma1) doc["sigma1"] = rational_json(*result.sigma1);
    if (result.sigma2) doc["sigma2"] = rational_json(*result.sigma2);
    if (breakdown) {
      Json rows = Json::array();
      for (const auto& c : result.breakdown) {
        Json row;
        row["label"] = c.label;
        if (c.weightFactor) row["weightFactor"] = c.weightFactor->str();
        row["R"] = c.r.str();
        row["chiC"] = rational_json(c.chiC);
        row["trace"] = c.trace.str();
        row["contribution"] = rational_json(c.contribution);
        rows.push_back(std::move(row));
      }
      doc["breakdown"] = std::move(rows);
    }
    return doc.dump(2) + "\n";
  }

  if (fmt == Format::Csv) {
    if (!breakdown) {
      std::vector<std::string> header{"group", "m",   "p",     "weight",
                                      "chi",   "sigma1", "sigma2"};
      std::vector<std::string> row{
          group_name(result.group),
          std::to_string(result.m),
          result.p ? std::to_string(*result.p) : "",
          weight_str(result.weight),
          rational_str(result.chi),
          result.sigma1 ? rational_str(*result.sigma1) : "",
          result.sigma2 ? rational_str(*result.sigma2) : ""};
      return csv_table(header, {row});
    }
    std::vector<std::string> header{"label", "R", "chiC", "trace",
                                    "contribution"};
    if (gamma) header.insert(header.begin() + 1, "weightFactor");
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : result.breakdown) {
      std::vector<std::string> row{c.label, c.r.str(), rational_str(c.chiC),
                                   c.trace.str(), rational_str(c.contribution)};
      if (gamma)
        row.insert(row.begin() + 1,
                   c.weightFactor ? c.weightFactor->str() : "");
      rows.push_back(std::move(row));
    }
    return csv_table(header, rows);
  }

  // markdown
  std::ostringstream out;
  out << "group: " << group_name(result.group) << "\n";
  out << "m: " << result.m << "\n";
  if (result.p) out << "p: " << *result.p << "\n";
  out << "weight: " << weight_str(result.weight) << "\n";
  out << "chi: " << rational_str(result.chi) << "\n";
  if (result.sigma1) out << "sigma1: " << rational_str(*result.sigma1) << "\n";
  if (result.sigma2) out << "sigma2: " << rational_str(*result.sigma2) << "\n";
  if (breakdown) {
    out << "\n";
    std::vector<std::string> header{"class", "R", "chi(C)", "trace",
                                    "contribution"};
    if (gamma) header.insert(header.begin() + 1, "weight factor");
    std::vector<std::vector<std::string>> rows;
    for (const auto& c : result.breakdown) {
      std::vector<std::string> row{c.label, c.r.str(), rational_str(c.chiC),
                                   c.trace.str(), rational_str(c.contribution)};
      if (gamma)
        row.insert(row.begin() + 1,
                   c.weightFactor ? c.weightFactor->str() : "");
      rows.push_back(std::move(row));
    }
    out << md_table(header, rows);
  }
  return out.str();
}

std::string render_classes(int m, Format fmt) {
  const auto classes = enumerate_classes(m);
  if (fmt == Format::Json) {
    Json doc;
    doc["m"] = m;
    Json rows = Json::array();
    for (const auto& cls : classes) {
      Json row;
      row["label"] = cls.label();
      row["charPoly"] = cls.char_poly().str();
      row["R"] = cls.resultant().str();
      row["chiC"] = rational_json(cls.centralizer_chi());
      row["det"] = cls.det();
      row["unitMult"] = cls.unit_multiplicity();
      rows.push_back(std::move(row));
    }
    doc["classes"] = std::move(rows);
    return doc.dump(2) + "\n";
  }
  std::vector<std::string> header{"label", "charPoly", "R",
                                  "chiC",  "det",      "unitMult"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& cls : classes) {
    rows.push_back({cls.label(), cls.char_poly().str(), cls.resultant().str(),
                    rational_str(cls.centralizer_chi()),
                    std::to_string(cls.det()),
                    std::to_string(cls.unit_multiplicity())});
  }
  return fmt == Format::Csv ? csv_table(header, rows) : md_table(header, rows);
}

std::string render_table_sl2gl2(int maxM, Format fmt) {
  require(maxM >= 0 && maxM <= 200, "sl2gl2: max weight must be within 0..200");
  std::vector<std::vector<std::string>> rows;
  Json jrows = Json::array();
  for (int m = 0; m <= maxM; ++m) {
    const Rational gl = chi_gl(2, Weight{m, 0}).chi;
    const Rational glDet = chi_gl(2, Weight{m + 1, 1}).chi;
    const Rational sl = chi_sl(2, Weight{m, 0});
    if (fmt == Format::Json) {
      Json row;
      row["m"] = m;
      row["gl"] = rational_json(gl);
      row["glDet"] = rational_json(glDet);
      row["sl"] = rational_json(sl);
      jrows.push_back(std::move(row));
    } else {
      rows.push_back({std::to_string(m), rational_str(gl), rational_str(glDet),
                      rational_str(sl)});
    }
  }
  if (fmt == Format::Json) {
    Json doc;
    doc["table"] = "sl2gl2";
    doc["rows"] = std::move(jrows);
    return doc.dump(2) + "\n";
  }
  std::vector<std::string> header{"m", "chi_gl2", "chi_gl2_det", "chi_sl2"};
  return fmt == Format::Csv ? csv_table(header, rows) : md_table(header, rows);
}

std::string render_table_cuspdims(const std::vector<long long>& primes,
                                  const std::vector<int>& weights,
                                  Format fmt) {
  require(!primes.empty() && primes.size() <= 50,
          "cuspdims: between 1 and 50 primes");
  require(!weights.empty(), "cuspdims: at least one weight");
  for (int k : weights) require(k >= 2 && k <= 200, "cuspdims: weights must be within 2..200");

  if (fmt == Format::Json) {
    Json doc;
    doc["table"] = "cuspdims";
    doc["primes"] = primes;
    Json jrows = Json::array();
    for (int k : weights) {
      Json row;
      row["k"] = k;
      Json dims = Json::array();
      for (long long p : primes) dims.push_back(dim_cusp_gamma1p(k, p).str());
      row["dims"] = std::move(dims);
      jrows.push_back(std::move(row));
    }
    doc["rows"] = std::move(jrows);
    return doc.dump(2) + "\n";
  }
  std::vector<std::string> header{"k"};
  for (long long p : primes) header.push_back("p=" + std::to_string(p));
  std::vector<std::vector<std::string>> rows;
  for (int k : weights) {
    std::vector<std::string> row{std::to_string(k)};
    for (long long p : primes) row.push_back(dim_cusp_gamma1p(k, p).str());
    rows.push_back(std::move(row));
  }
  return fmt == Format::Csv ? csv_table(header, rows) : md_table(header, rows);
}

std::string render_table_gamma1_3p(long long p, int bound, Format fmt) {
  require(bound >= 0 && bound <= 200,
          "gamma1-3p: bound must be within 0..200");
  static const char kLetters[8] = {'a', 'b', 'c', 'd', 'e', 'f', 'g', 'h'};
  std::vector<std::vector<std::string>> rows;
  Json jrows = Json::array();
  for (int ci = 0; ci < 8; ++ci)
    for (int a = 0; a <= bound; ++a)
      for (int bb = 0; bb <= bound; ++bb) {
        const Weight w = trace_case_weight(ci, a, bb);
        if (!is_dominant(w) || w[0] - w[2] > bound) continue;
        const Rational stated = gamma1_3p_closed_chi(w, p);
        const Rational engine = chi_gamma1(3, p, w).chi;
        const bool match = stated == engine;
        if (fmt == Format::Json) {
          Json row;
          row["case"] = std::string(1, kLetters[ci]);
          row["lambda"] = w;
          row["stated"] = rational_json(stated);
          row["engine"] = rational_json(engine);
          row["match"] = match;
          jrows.push_back(std::move(row));
        } else {
          rows.push_back({std::string(1, kLetters[ci]), weight_str(w),
                          rational_str(stated), rational_str(engine),
                          match ? "yes" : "NO"});
        }
      }
  if (fmt == Format::Json) {
    Json doc;
    doc["table"] = "gamma1-3p";
    doc["p"] = p;
    doc["bound"] = bound;
    doc["rows"] = std::move(jrows);
    return doc.dump(2) + "\n";
  }
  std::vector<std::string> header{"case", "lambda", "stated", "engine",
                                  "match"};
  return fmt == Format::Csv ? csv_table(header, rows) : md_table(header, rows);
}

std::string render_audit(const std::vector<AuditRecord>& records, Format fmt) {
  size_t discrepancies = 0;
  for (const auto& r : records)
    if (!r.equal) ++discrepancies;

  if (fmt == Format::Json) {
    Json doc;
    doc["records"] = Json::array();
    for (const auto& r : records) {
      Json row;
      row["formula"] = r.formula;
      row["inputs"] = r.inputs;
      row["stated"] = r.stated;
      row["recomputed"] = r.recomputed;
      row["equal"] = r.equal;
      doc["records"].push_back(std::move(row));
    }
    doc["total"] = records.size();
    doc["discrepancies"] = discrepancies;
    return doc.dump(2) + "\n";
  }

  std::vector<std::string> header{"formula", "inputs", "stated", "recomputed",
                                  "equal"};
  std::vector<std::vector<std::string>> rows;
  for (const auto& r : records)
    rows.push_back(
        {r.formula, r.inputs, r.stated, r.recomputed, r.equal ? "yes" : "NO"});
  if (fmt == Format::Csv) return csv_table(header, rows);
  std::ostringstream out;
  out << records.size() << " records, " << discrepancies
      << " discrepancies\n\n";
  out << md_table(header, rows);
  return out.str();
}

}  // namespace eulerchi
