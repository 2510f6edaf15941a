#include "slabinv/io.hpp"

#include <charconv>
#include <fstream>
#include <system_error>

#include <json.hpp>

namespace slabinv {

namespace {

// std::to_chars is locale-independent; 12 significant digits in general format.
void append_number(std::string& out, double value)
{
    char buf[48];
    const auto result = std::to_chars(buf, buf + sizeof(buf), value,
                                      std::chars_format::general, 12);
    out.append(buf, result.ptr);
}

}  // namespace

std::string scan_to_csv(const std::vector<ScanRow>& rows)
{
    std::string out = "K,lambda_nm,T2m1,argT,Rl2,Rr2\n";
    for (const ScanRow& row : rows) {
        append_number(out, row.K);
        out.push_back(',');
        append_number(out, row.lambda_nm);
        out.push_back(',');
        append_number(out, row.t2m1);
        out.push_back(',');
        append_number(out, row.arg_t);
        out.push_back(',');
        append_number(out, row.rl2);
        out.push_back(',');
        append_number(out, row.rr2);
        out.push_back('\n');
    }
    return out;
}

void write_scan_csv(const std::vector<ScanRow>& rows, const std::string& path)
{
    std::ofstream file(path, std::ios::binary);
    if (!file)
        throw std::system_error(errno, std::generic_category(),
                                "cannot open output file: " + path);
    const std::string csv = scan_to_csv(rows);
    file.write(csv.data(), static_cast<std::streamsize>(csv.size()));
    if (!file)
        throw std::system_error(errno, std::generic_category(),
                                "write failed: " + path);
}

std::string config_to_json(const SlabConfig& config)
{
    nlohmann::json j;
    j["n1"] = {{"re", config.n1.real()}, {"im", config.n1.imag()}};
    j["n2"] = {{"re", config.n2.real()}, {"im", config.n2.imag()}};
    j["L_um"] = config.thickness_um;
    return j.dump();
}

SlabConfig config_from_json(const std::string& json_text)
{
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(json_text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("config JSON parse error: ") + e.what());
    }
    try {
        SlabConfig config;
        config.n1 = Complex(j.at("n1").at("re").get<double>(), j.at("n1").at("im").get<double>());
        config.n2 = Complex(j.at("n2").at("re").get<double>(), j.at("n2").at("im").get<double>());
        config.thickness_um = j.at("L_um").get<double>();
        if (config.n1 == Complex(0.0, 0.0) || config.n2 == Complex(0.0, 0.0))
            throw std::invalid_argument("config JSON: layer indices must be nonzero");
        if (!(config.thickness_um > 0.0))
            throw std::invalid_argument("config JSON: L_um must be positive");
        return config;
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("config JSON missing field: ") + e.what());
    }
}

SlabConfig config_from_json_file(const std::string& path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw std::system_error(errno, std::generic_category(),
                                "cannot open config file: " + path);
    std::string text((std::istreambuf_iterator<char>(file)), std::istreambuf_iterator<char>());
    return config_from_json(text);
}

}  // namespace slabinv
