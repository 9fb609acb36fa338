#include "vogan/vogan.h"

#include <cstdlib>
#include <cstring>
#include <string>

#include "vogan/payload.hpp"
#include "vogan/render.hpp"

struct vogan_diagram {
  vogan::Diagram diagram;
};

namespace {

thread_local std::string last_error;

vogan_status status_of(vogan::ErrorCode code) {
  using vogan::ErrorCode;
  switch (code) {
    case ErrorCode::InvalidParams: return VOGAN_ERR_INVALID_PARAMS;
    case ErrorCode::InvalidDiagram: return VOGAN_ERR_INVALID_DIAGRAM;
    case ErrorCode::InvalidCircling: return VOGAN_ERR_INVALID_CIRCLING;
    case ErrorCode::UnknownVertex: return VOGAN_ERR_UNKNOWN_VERTEX;
    case ErrorCode::NotPressable: return VOGAN_ERR_NOT_PRESSABLE;
    case ErrorCode::NotAdmissible: return VOGAN_ERR_NOT_ADMISSIBLE;
    case ErrorCode::CapExceeded: return VOGAN_ERR_CAP_EXCEEDED;
    case ErrorCode::DimensionMismatch: return VOGAN_ERR_DIMENSION_MISMATCH;
    case ErrorCode::ZeroNorm: return VOGAN_ERR_ZERO_NORM;
    case ErrorCode::Parse: return VOGAN_ERR_PARSE;
  }
  return VOGAN_ERR_INTERNAL;
}

char* copy_out(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p != nullptr) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// Runs body and converts exceptions into a status plus the thread's message.
template <typename F>
vogan_status guarded(F&& body) {
  try {
    last_error.clear();
    body();
    return VOGAN_OK;
  } catch (const vogan::Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
  } catch (const std::exception& e) {
    last_error = e.what();
  }
  return VOGAN_ERR_INTERNAL;
}

vogan::Circling circling(const vogan_diagram* d, const int* ids, size_t count) {
  if (count > 0 && ids == nullptr) {
    throw vogan::Error(vogan::ErrorCode::InvalidCircling, "circling pointer is null");
  }
  std::vector<vogan::NodeId> v(ids, ids + count);
  return vogan::make_circling(d->diagram, v);
}

template <typename F>
vogan_status emit(const vogan_diagram* d, char** out, F&& make) {
  if (d == nullptr || out == nullptr) {
    last_error = "null argument";
    return VOGAN_ERR_NULL_ARGUMENT;
  }
  *out = nullptr;
  return guarded([&] { *out = copy_out(make()); });
}

vogan_status null_arg() {
  last_error = "null argument";
  return VOGAN_ERR_NULL_ARGUMENT;
}

}  // namespace

extern "C" {

const char* vogan_status_name(vogan_status status) {
  switch (status) {
    case VOGAN_OK: return "Ok";
    case VOGAN_ERR_INVALID_PARAMS: return "InvalidParams";
    case VOGAN_ERR_INVALID_DIAGRAM: return "InvalidDiagram";
    case VOGAN_ERR_INVALID_CIRCLING: return "InvalidCircling";
    case VOGAN_ERR_UNKNOWN_VERTEX: return "UnknownVertex";
    case VOGAN_ERR_NOT_PRESSABLE: return "NotPressable";
    case VOGAN_ERR_NOT_ADMISSIBLE: return "NotAdmissible";
    case VOGAN_ERR_CAP_EXCEEDED: return "CapExceeded";
    case VOGAN_ERR_DIMENSION_MISMATCH: return "DimensionMismatch";
    case VOGAN_ERR_ZERO_NORM: return "ZeroNorm";
    case VOGAN_ERR_PARSE: return "Parse";
    case VOGAN_ERR_NULL_ARGUMENT: return "NullArgument";
    case VOGAN_ERR_INTERNAL: return "Internal";
  }
  return "Unknown";
}

const char* vogan_last_error(void) { return last_error.c_str(); }

void vogan_string_free(char* s) { std::free(s); }

vogan_status vogan_families(char** out) {
  if (out == nullptr) return null_arg();
  return guarded([&] { *out = copy_out(vogan::families_payload().dump()); });
}

vogan_status vogan_diagram_build(const char* family, int m, int n, const char* alpha,
                                 vogan_diagram** out) {
  if (family == nullptr || out == nullptr) return null_arg();
  *out = nullptr;
  return guarded([&] {
    const auto f = vogan::family_from_string(family);
    if (!f) throw vogan::Error(vogan::ErrorCode::InvalidParams, std::string("unknown family \"") + family + "\"");
    vogan::Rational a{2};
    if (alpha != nullptr) {
      const auto parsed = vogan::parse_rational(alpha);
      if (!parsed) throw vogan::Error(vogan::ErrorCode::InvalidParams, std::string("bad alpha \"") + alpha + "\"");
      a = *parsed;
    }
    const vogan::FamilySpec spec = vogan::make_spec(*f, m, n, a);
    *out = new vogan_diagram{vogan::build_preferred_diagram(spec)};
  });
}

vogan_status vogan_diagram_parse(const char* json, vogan_diagram** out) {
  if (json == nullptr || out == nullptr) return null_arg();
  *out = nullptr;
  return guarded([&] { *out = new vogan_diagram{vogan::diagram_from_string(json)}; });
}

vogan_status vogan_diagram_from_ref(const char* json, vogan_diagram** out) {
  if (json == nullptr || out == nullptr) return null_arg();
  *out = nullptr;
  return guarded([&] {
    const vogan::Json ref = vogan::parse_json(json);
    if (!ref.is_object() || !ref.contains("family") || !ref.at("family").is_string()) {
      throw vogan::Error(vogan::ErrorCode::Parse, "diagram reference needs a \"family\" string");
    }
    if (ref.contains("nodes")) {
      *out = new vogan_diagram{vogan::diagram_from_json(ref)};
      return;
    }
    vogan::FamilySpec spec = vogan::spec_from_json(ref.at("family").get<std::string>(),
                                                   ref.contains("params") ? ref.at("params") : vogan::Json());
    if (ref.contains("parity")) {
      const auto& p = ref.at("parity");
      const auto rule = p.is_string() ? vogan::parity_from_string(p.get<std::string>()) : std::nullopt;
      if (!rule) throw vogan::Error(vogan::ErrorCode::Parse, "parity must be \"even\" or \"odd\"");
      spec.parity_rule = *rule;
    }
    *out = new vogan_diagram{vogan::build_preferred_diagram(spec)};
  });
}

vogan_status vogan_diagram_set_parity(vogan_diagram* d, const char* rule) {
  if (d == nullptr || rule == nullptr) return null_arg();
  return guarded([&] {
    const auto p = vogan::parity_from_string(rule);
    if (!p) throw vogan::Error(vogan::ErrorCode::InvalidParams, "parity must be \"even\" or \"odd\"");
    d->diagram.family.parity_rule = *p;
  });
}

void vogan_diagram_free(vogan_diagram* d) { delete d; }

int vogan_diagram_size(const vogan_diagram* d) { return d == nullptr ? 0 : d->diagram.size(); }

int vogan_diagram_verified(const vogan_diagram* d) { return d != nullptr && d->diagram.verified ? 1 : 0; }

vogan_status vogan_diagram_json(const vogan_diagram* d, char** out) {
  return emit(d, out, [&] { return vogan::canonical_json(d->diagram); });
}

vogan_status vogan_render(const vogan_diagram* d, const char* format, const int* circled,
                          size_t count, char** out) {
  if (format == nullptr) return null_arg();
  return emit(d, out, [&] {
    const vogan::Circling c = circling(d, circled, count);
    const std::string f = format;
    if (f == "ascii") return vogan::render_ascii(d->diagram, c);
    if (f == "dot") return vogan::render_dot(d->diagram, c);
    if (f == "json") return vogan::canonical_json(d->diagram);
    throw vogan::Error(vogan::ErrorCode::InvalidParams, "format must be ascii, dot or json");
  });
}

vogan_status vogan_press(const vogan_diagram* d, const int* circled, size_t count, int vertex,
                         char** out) {
  return emit(d, out, [&] {
    return vogan::press_payload(d->diagram, circling(d, circled, count), vertex).dump();
  });
}

vogan_status vogan_orbit(const vogan_diagram* d, const int* circled, size_t count, char** out) {
  return emit(d, out, [&] {
    return vogan::orbit_payload(d->diagram, circling(d, circled, count),
                                vogan::EngineOptions::from_environment())
        .dump();
  });
}

vogan_status vogan_related(const vogan_diagram* d, const int* c1, size_t n1, const int* c2,
                           size_t n2, char** out) {
  return emit(d, out, [&] {
    return vogan::related_payload(d->diagram, circling(d, c1, n1), circling(d, c2, n2),
                                  vogan::EngineOptions::from_environment())
        .dump();
  });
}

vogan_status vogan_equivalent(const vogan_diagram* d, const int* c1, size_t n1, const int* c2,
                              size_t n2, char** out) {
  return emit(d, out, [&] {
    return vogan::equivalent_payload(d->diagram, circling(d, c1, n1), circling(d, c2, n2),
                                     vogan::EngineOptions::from_environment())
        .dump();
  });
}

vogan_status vogan_reduce(const vogan_diagram* d, const int* circled, size_t count, char** out) {
  return emit(d, out, [&] {
    return vogan::reduce_payload(d->diagram, circling(d, circled, count),
                                 vogan::EngineOptions::from_environment())
        .dump();
  });
}

vogan_status vogan_admissible(const vogan_diagram* d, const int* circled, size_t count,
                              char** out) {
  return emit(d, out, [&] {
    return vogan::admissible_payload(d->diagram, circling(d, circled, count)).dump();
  });
}

vogan_status vogan_symmetries(const vogan_diagram* d, char** out) {
  return emit(d, out, [&] { return vogan::symmetries_payload(d->diagram).dump(); });
}

vogan_status vogan_classify(const vogan_diagram* d, char** out) {
  return emit(d, out, [&] {
    return vogan::classify_payload(d->diagram, vogan::EngineOptions::from_environment()).dump();
  });
}

vogan_status vogan_reflect(const vogan_diagram* d, const int* circled, size_t count, int vertex,
                           char** out) {
  return emit(d, out, [&] {
    return vogan::reflect_payload(d->diagram, circling(d, circled, count), vertex).dump();
  });
}

}  // extern "C"
