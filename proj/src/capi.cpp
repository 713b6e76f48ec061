#include "dainfty.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "core/bar.hpp"
#include "core/catalog.hpp"
#include "core/cooperad.hpp"
#include "core/document.hpp"
#include "core/rep.hpp"
#include "core/structure.hpp"

using namespace dainfty;

struct dainfty_family {
    StructureFamily fam;
};

struct dainfty_rep {
    RepFamily rep;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) return nullptr;
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

void set_out(char** slot, const std::string& s) {
    if (slot != nullptr) *slot = dup_string(s);
}

json parse_document(const char* text) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError(std::string("invalid JSON: ") + e.what());
    }
}

// Runs `body` and maps exceptions onto the error-code contract.
template <typename Fn>
int guarded(char** error, Fn&& body) {
    if (error != nullptr) *error = nullptr;
    try {
        return body();
    } catch (const TruncationError& e) {
        set_out(error, e.what());
        return DAINFTY_TRUNCATION_ERROR;
    } catch (const DocumentError& e) {
        set_out(error, e.what());
        return DAINFTY_INPUT_ERROR;
    } catch (const std::exception& e) {
        set_out(error, e.what());
        return DAINFTY_INPUT_ERROR;
    } catch (...) {
        set_out(error, "unknown error");
        return DAINFTY_INPUT_ERROR;
    }
}

}  // namespace

extern "C" {

const char* dainfty_version(void) { return "1.0.0"; }

void dainfty_string_free(char* s) { std::free(s); }

int dainfty_family_from_json(const char* json_text, dainfty_family** out,
                             char** error) {
    if (json_text == nullptr || out == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded(error, [&]() {
        auto holder = new dainfty_family{family_from_json(parse_document(json_text))};
        *out = holder;
        return DAINFTY_OK;
    });
}

int dainfty_family_from_example(const char* example_id, int arity_bound,
                                dainfty_family** out, char** error) {
    if (example_id == nullptr || out == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded(error, [&]() {
        ExampleId id = example_id_from_name(example_id);
        auto holder = new dainfty_family{build_example(id, arity_bound)};
        *out = holder;
        return DAINFTY_OK;
    });
}

int dainfty_family_to_json(const dainfty_family* fam, char** out_json) {
    if (fam == nullptr || out_json == nullptr) return DAINFTY_INPUT_ERROR;
    return guarded(nullptr, [&]() {
        *out_json = dup_string(dump_json(family_to_json(fam->fam)));
        return DAINFTY_OK;
    });
}

int dainfty_family_convert(const dainfty_family* fam, dainfty_family** out,
                           char** error) {
    if (fam == nullptr || out == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded(error, [&]() {
        auto holder = new dainfty_family{convert_convention(fam->fam)};
        *out = holder;
        return DAINFTY_OK;
    });
}

void dainfty_family_free(dainfty_family* fam) { delete fam; }

int dainfty_check(const dainfty_family* fam, int u_max, int v_max,
                  char** report_json, char** error) {
    if (fam == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    return guarded(error, [&]() {
        CheckResult result = check_derived_ainfinity(fam->fam, u_max, v_max);
        set_out(report_json, dump_json(check_report(fam->fam, result, "check",
                                                    u_max, v_max)));
        return result.pass ? DAINFTY_OK : DAINFTY_RELATION_FAILURE;
    });
}

int dainfty_check_bidga(const dainfty_family* fam, char** report_json,
                        char** error) {
    if (fam == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    return guarded(error, [&]() {
        CheckResult result = check_bidga(fam->fam);
        set_out(report_json,
                dump_json(check_report(fam->fam, result, "check-bidga", -1, -1)));
        return result.pass ? DAINFTY_OK : DAINFTY_RELATION_FAILURE;
    });
}

int dainfty_bar_check(const dainfty_family* fam, int u_max, int v_max,
                      char** report_json, char** error) {
    if (fam == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    return guarded(error, [&]() {
        CheckResult relation = check_derived_ainfinity(fam->fam, u_max, v_max);
        CoderivationFamily coder = bar_family_from_structure(fam->fam);
        CheckResult twisted = check_family_twisted(coder, u_max, v_max);
        set_out(report_json, dump_json(bar_check_report(fam->fam, relation,
                                                        twisted, u_max,
                                                        v_max)));
        bool pass = relation.pass && twisted.pass;
        return pass ? DAINFTY_OK : DAINFTY_RELATION_FAILURE;
    });
}

int dainfty_rep_from_json(const char* json_text, dainfty_rep** out,
                          char** error) {
    if (json_text == nullptr || out == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded(error, [&]() {
        auto holder = new dainfty_rep{rep_from_json(parse_document(json_text))};
        *out = holder;
        return DAINFTY_OK;
    });
}

int dainfty_rep_regular(const dainfty_family* fam, dainfty_rep** out,
                        char** error) {
    if (fam == nullptr || out == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded(error, [&]() {
        auto holder = new dainfty_rep{regular_representation(fam->fam)};
        *out = holder;
        return DAINFTY_OK;
    });
}

int dainfty_rep_to_json(const dainfty_rep* rep, char** out_json) {
    if (rep == nullptr || out_json == nullptr) return DAINFTY_INPUT_ERROR;
    return guarded(nullptr, [&]() {
        *out_json = dup_string(dump_json(rep_to_json(rep->rep)));
        return DAINFTY_OK;
    });
}

void dainfty_rep_free(dainfty_rep* rep) { delete rep; }

int dainfty_check_rep(const dainfty_rep* rep, int u_max, int arity_max,
                      char** report_json, char** error) {
    if (rep == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    return guarded(error, [&]() {
        RepCoderivationFamily coder = rep_family_from_action(rep->rep);
        RepCheckResult result = check_rep(coder, u_max, arity_max);
        set_out(report_json, dump_json(rep_check_report(coder, result,
                                                        u_max, arity_max)));
        return result.pass ? DAINFTY_OK : DAINFTY_RELATION_FAILURE;
    });
}

int dainfty_cooperad(const char* kind, int u, int v, int as_json, char** out,
                     char** error) {
    if (kind == nullptr || out == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded(error, [&]() {
        CooperadKind k = cooperad_kind_from_name(kind);
        std::vector<DecompTerm> terms = cooperad_comultiplication(k, u, v);
        if (as_json != 0) {
            *out = dup_string(dump_json(cooperad_report(k, u, v, terms)));
        } else {
            *out = dup_string(cooperad_text(k, u, v, terms));
        }
        return DAINFTY_OK;
    });
}

int dainfty_report_text(const char* report_json, char** out, char** error) {
    if (report_json == nullptr || out == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    *out = nullptr;
    return guarded(error, [&]() {
        json report = parse_document(report_json);
        *out = dup_string(check_report_text(report));
        return DAINFTY_OK;
    });
}

int dainfty_document_kind(const char* json_text, char** kind, char** error) {
    if (json_text == nullptr || kind == nullptr) {
        set_out(error, "null argument");
        return DAINFTY_INPUT_ERROR;
    }
    *kind = nullptr;
    return guarded(error, [&]() {
        json doc = parse_document(json_text);
        *kind = dup_string(is_representation_document(doc) ? "representation"
                                                           : "structure");
        return DAINFTY_OK;
    });
}

}  // extern "C"
