#pragma once

#include <string>
#include <vector>

#include "eulerchi/eulerchar.hpp"
#include "eulerchi/formulas.hpp"

namespace eulerchi {

enum class Format { Md, Json, Csv };
Format parse_format(const std::string& s);

std::string render_chi(const ChiResult& result, Format fmt, bool breakdown);
std::string render_classes(int m, Format fmt);
std::string render_table_sl2gl2(int maxM, Format fmt);
std::string render_table_cuspdims(const std::vector<long long>& primes,
                                  const std::vector<int>& weights, Format fmt);
std::string render_table_gamma1_3p(long long p, int bound, Format fmt);
std::string render_audit(const std::vector<AuditRecord>& records, Format fmt);

}  // namespace eulerchi
