#include "quasitoric/fixtures.hpp"

#include <cstdio>

namespace quasitoric {
namespace fixtures {

namespace {

std::string fmt(double x) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

std::string interval(double s, double t) {
    return std::string("{\n") + "  \"n\": 1,\n" + "  \"params\": {\"s\": " + fmt(s) +
           ", \"t\": " + fmt(t) + "},\n" +
           "  \"normals\": [[\"s\"], [\"-t\"]],\n" +
           "  \"offsets\": [0, \"-t\"],\n" +
           "  \"quasilattice\": [[\"s\"], [\"t\"]]\n" + "}\n";
}

std::string triangle(double s, double t) {
    return std::string("{\n") + "  \"n\": 2,\n" + "  \"params\": {\"s\": " + fmt(s) +
           ", \"t\": " + fmt(t) + "},\n" +
           "  \"normals\": [[1, 0], [0, 1], [\"-t\", \"-s\"]],\n" +
           "  \"offsets\": [0, 0, \"-s*t\"]\n" + "}\n";
}

std::string pentagon() {
    return R"json({
  "n": 2,
  "params": {"a": "cos(2*pi/5)", "b": "sin(2*pi/5)", "c": "cos(4*pi/5)", "d": "sin(4*pi/5)"},
  "normals": [[1, 0], ["a", "b"], ["c", "d"], ["c", "-d"], ["a", "-b"]],
  "offsets": ["c", "c", "c", "c", "c"]
}
)json";
}

std::string square() {
    return R"json({
  "n": 2,
  "normals": [[1, 0], [0, 1], [-1, 0], [0, -1]],
  "offsets": [0, 0, -1, -1]
}
)json";
}

std::string octahedron() {
    return R"json({
  "n": 3,
  "normals": [[1, 1, 1], [1, 1, -1], [1, -1, 1], [1, -1, -1],
              [-1, 1, 1], [-1, 1, -1], [-1, -1, 1], [-1, -1, -1]],
  "offsets": [-1, -1, -1, -1, -1, -1, -1, -1]
}
)json";
}

std::vector<std::string> names() { return {"interval", "triangle", "pentagon", "square"}; }

std::string by_name(const std::string& name, double s, double t) {
    if (name == "interval") return interval(s, t);
    if (name == "triangle") return triangle(s, t);
    if (name == "pentagon") return pentagon();
    if (name == "square") return square();
    throw ParseError("unknown example name \"" + name +
                     "\" (known: interval, triangle, pentagon, square)");
}

}  // namespace fixtures
}  // namespace quasitoric
