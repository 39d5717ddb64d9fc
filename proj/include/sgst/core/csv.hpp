#pragma once

#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "sgst/core/error.hpp"

namespace sgst {

/// RFC-4180 CSV writer with a mandatory header row and deterministic number
/// formatting (shortest round-trip via %.17g is avoided on purpose: fixed
/// %.*g keeps bytes identical across libc versions). Lines end with CRLF.
class CsvWriter {
public:
    explicit CsvWriter(const std::string& path, const std::vector<std::string>& header)
        : out_(path, std::ios::binary) {
        if (!out_) throw ParameterError("csv: cannot open " + path + " for writing");
        write_row(header);
    }

    void write_row(const std::vector<std::string>& fields) {
        for (std::size_t i = 0; i < fields.size(); ++i) {
            if (i) out_ << ',';
            out_ << escape(fields[i]);
        }
        out_ << "\r\n";
    }

    static std::string field(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", v);
        return buf;
    }
    static std::string field(long long v) { return std::to_string(v); }
    static std::string field(unsigned long long v) { return std::to_string(v); }
    static std::string field(int v) { return std::to_string(v); }
    static std::string field(bool v) { return v ? "1" : "0"; }

private:
    static std::string escape(const std::string& s) {
        if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
        std::string q = "\"";
        for (char c : s) {
            q += c;
            if (c == '"') q += '"';
        }
        q += '"';
        return q;
    }

    std::ofstream out_;
};

}  // namespace sgst
