#include "catsim/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace catsim::io {

std::string format_double(double value) {
  char buf[64];
  const int written = std::snprintf(buf, sizeof(buf), "%.17g", value);
  return std::string(buf, static_cast<size_t>(written));
}

namespace {

void append_complex(std::string& out, const Complex& c) {
  out += '[';
  out += format_double(c.real());
  out += ',';
  out += format_double(c.imag());
  out += ']';
}

}  // namespace

std::string state_to_json(const PureState& s) {
  std::string out = "{\"format\":\"catsim-state-v1\",\"modes\":1,\"cutoff\":";
  out += std::to_string(s.cutoff);
  out += ",\"amplitudes\":[";
  for (int n = 0; n <= s.cutoff; ++n) {
    if (n > 0) out += ',';
    append_complex(out, s[n]);
  }
  out += "]}";
  return out;
}

std::string state_to_json(const TwoModePureState& s) {
  std::string out = "{\"format\":\"catsim-state-v1\",\"modes\":2,\"cutoff_a\":";
  out += std::to_string(s.cutoff_a);
  out += ",\"cutoff_b\":";
  out += std::to_string(s.cutoff_b);
  out += ",\"amplitudes\":[";
  for (int na = 0; na <= s.cutoff_a; ++na) {
    if (na > 0) out += ',';
    out += '[';
    for (int nb = 0; nb <= s.cutoff_b; ++nb) {
      if (nb > 0) out += ',';
      append_complex(out, s.at(na, nb));
    }
    out += ']';
  }
  out += "]}";
  return out;
}

namespace {

Complex parse_complex(const nlohmann::json& pair) {
  if (!pair.is_array() || pair.size() != 2) {
    throw InvalidArgumentError("state JSON: amplitude is not an [re, im] pair");
  }
  return Complex(pair[0].get<double>(), pair[1].get<double>());
}

AnyPureState parse_state_object(const nlohmann::json& doc) {
  if (!doc.is_object() || doc.value("format", "") != "catsim-state-v1") {
    throw InvalidArgumentError("state JSON: missing catsim-state-v1 format tag");
  }
  const int modes = doc.value("modes", 0);
  if (modes == 1) {
    const int cutoff = doc.at("cutoff").get<int>();
    const auto& amps = doc.at("amplitudes");
    if (cutoff < 1 || static_cast<int>(amps.size()) != cutoff + 1) {
      throw InvalidArgumentError("state JSON: amplitude count != cutoff + 1");
    }
    PureState s(cutoff);
    for (int n = 0; n <= cutoff; ++n) {
      s[n] = parse_complex(amps[static_cast<size_t>(n)]);
    }
    return s;
  }
  if (modes == 2) {
    const int cutoff_a = doc.at("cutoff_a").get<int>();
    const int cutoff_b = doc.at("cutoff_b").get<int>();
    const auto& rows = doc.at("amplitudes");
    if (cutoff_a < 1 || cutoff_b < 1 ||
        static_cast<int>(rows.size()) != cutoff_a + 1) {
      throw InvalidArgumentError("state JSON: row count != cutoff_a + 1");
    }
    TwoModePureState s(cutoff_a, cutoff_b);
    for (int na = 0; na <= cutoff_a; ++na) {
      const auto& row = rows[static_cast<size_t>(na)];
      if (static_cast<int>(row.size()) != cutoff_b + 1) {
        throw InvalidArgumentError("state JSON: column count != cutoff_b + 1");
      }
      for (int nb = 0; nb <= cutoff_b; ++nb) {
        s.at(na, nb) = parse_complex(row[static_cast<size_t>(nb)]);
      }
    }
    return s;
  }
  throw InvalidArgumentError("state JSON: modes must be 1 or 2");
}

}  // namespace

AnyPureState state_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("state JSON: parse error: ") +
                               e.what());
  }
  try {
    if (doc.is_object() && !doc.contains("format") && doc.contains("state")) {
      return parse_state_object(doc.at("state"));
    }
    return parse_state_object(doc);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgumentError(std::string("state JSON: bad document: ") +
                               e.what());
  }
}

AnyPureState load_state_file(const std::string& path) {
  return state_from_json(read_text_file(path));
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw InvalidArgumentError("cannot open for writing: " + path);
  }
  out << content;
  if (!out) {
    throw Error("write failed: " + path);
  }
}

std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw InvalidArgumentError("cannot open: " + path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace catsim::io
