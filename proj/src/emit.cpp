#include "divmeas/emit.hpp"

#include <cstdio>
#include <fstream>
#include <iostream>

#include "divmeas/errors.hpp"

namespace divmeas {

std::string format_number(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

void write_artifact(const std::string& path, const std::string& text) {
    if (path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw numeric_error("cannot open output file: " + path);
    out << text;
    if (!out) throw numeric_error("write failed: " + path);
}

}  // namespace divmeas
