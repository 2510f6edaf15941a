#pragma once

#include <string>
#include <vector>

#include "slabinv/scan.hpp"
#include "slabinv/scattering.hpp"

namespace slabinv {

// CSV with header "K,lambda_nm,T2m1,argT,Rl2,Rr2", one newline-terminated row
// per sample, 12 significant digits, locale-independent formatting. The same
// inputs always produce the same bytes.
std::string scan_to_csv(const std::vector<ScanRow>& rows);
void write_scan_csv(const std::vector<ScanRow>& rows, const std::string& path);

// {"n1": {"re":.., "im":..}, "n2": {"re":.., "im":..}, "L_um": ..}
std::string config_to_json(const SlabConfig& config);
SlabConfig config_from_json(const std::string& json_text);
SlabConfig config_from_json_file(const std::string& path);

}  // namespace slabinv
