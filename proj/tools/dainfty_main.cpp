#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>

#include "dainfty.h"

namespace {

struct StringFree {
    void operator()(char* s) const { dainfty_string_free(s); }
};
using CStr = std::unique_ptr<char, StringFree>;

struct FamilyFree {
    void operator()(dainfty_family* f) const { dainfty_family_free(f); }
};
using Family = std::unique_ptr<dainfty_family, FamilyFree>;

struct RepFree {
    void operator()(dainfty_rep* r) const { dainfty_rep_free(r); }
};
using Rep = std::unique_ptr<dainfty_rep, RepFree>;

int fail(int code, char* error) {
    CStr owned(error);
    std::cerr << "error: " << (owned ? owned.get() : "unknown") << "\n";
    return code;
}

bool read_file(const std::string& path, std::string& out) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return false;
    std::ostringstream buf;
    buf << in.rdbuf();
    out = buf.str();
    return true;
}

int emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return 0;
    }
    std::ofstream out(out_path, std::ios::binary);
    if (!out) {
        std::cerr << "error: cannot write " << out_path << "\n";
        return DAINFTY_INPUT_ERROR;
    }
    out << text;
    return 0;
}

int load_family(const std::string& path, Family& fam) {
    std::string text;
    if (!read_file(path, text)) {
        std::cerr << "error: cannot read " << path << "\n";
        return DAINFTY_INPUT_ERROR;
    }
    dainfty_family* raw = nullptr;
    char* error = nullptr;
    int rc = dainfty_family_from_json(text.c_str(), &raw, &error);
    if (rc != DAINFTY_OK) return fail(rc, error);
    fam.reset(raw);
    return DAINFTY_OK;
}

// Prints the JSON report, or a text summary, honoring the checker status.
int finish_check(int rc, char* report, char* error, const std::string& format) {
    CStr owned_report(report);
    if (owned_report == nullptr) return fail(rc, error);
    CStr owned_error(error);
    if (format == "json") {
        std::cout << owned_report.get();
        return rc;
    }
    char* text = nullptr;
    char* terr = nullptr;
    int trc = dainfty_report_text(owned_report.get(), &text, &terr);
    if (trc != DAINFTY_OK) return fail(trc, terr);
    CStr owned_text(text);
    std::cout << owned_text.get();
    return rc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact checker for derived A-infinity structures"};
    app.require_subcommand(1);

    std::string path;
    std::string format = "text";
    std::string out_path;
    std::string kind;
    std::string example_id;
    int u_max = 2;
    int v_max = 6;
    int arity_max = 4;
    int arity_bound = 8;
    int u_arg = 0;
    int v_arg = 1;
    bool regular_rep = false;

    auto add_format = [&](CLI::App* cmd) {
        cmd->add_option("--format", format, "output format: text or json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* cmd_check =
        app.add_subcommand("check", "verify the structure relations");
    cmd_check->add_option("file", path, "structure document")->required();
    cmd_check->add_option("--u-max", u_max, "largest horizontal weight");
    cmd_check->add_option("--v-max", v_max, "largest arity weight");
    add_format(cmd_check);

    CLI::App* cmd_bidga =
        app.add_subcommand("check-bidga", "verify the bidga axioms");
    cmd_bidga->add_option("file", path, "structure document")->required();
    add_format(cmd_bidga);

    CLI::App* cmd_rep =
        app.add_subcommand("check-rep", "verify a representation");
    cmd_rep->add_option("file", path, "representation document")->required();
    cmd_rep->add_option("--u-max", u_max, "largest horizontal weight");
    cmd_rep->add_option("--arity-max", arity_max, "largest total arity");
    add_format(cmd_rep);

    CLI::App* cmd_bar = app.add_subcommand(
        "bar-check",
        "run the relation check and the coalgebraic twisted-family check");
    cmd_bar->add_option("file", path, "structure document")->required();
    cmd_bar->add_option("--u-max", u_max, "largest horizontal weight");
    // bar-check defaults to v-max 4 (applied after parse when the flag is
    // absent); the variable's initializer belongs to `check`.
    cmd_bar->add_option("--v-max", v_max, "largest arity weight");
    add_format(cmd_bar);

    CLI::App* cmd_coop =
        app.add_subcommand("cooperad", "print a cooperad comultiplication");
    cmd_coop->add_option("kind", kind, "generator family: mu, mut or alpha")
        ->required();
    cmd_coop->add_option("u", u_arg, "horizontal weight")->required();
    cmd_coop->add_option("v", v_arg, "arity weight")->required();
    add_format(cmd_coop);

    CLI::App* cmd_example =
        app.add_subcommand("example", "write a catalog example document");
    cmd_example->add_option("id", example_id, "example identifier")->required();
    cmd_example->add_option("--arity-bound", arity_bound,
                            "truncation bound for the generated maps");
    cmd_example->add_flag("--regular-rep", regular_rep,
                          "emit the regular representation document instead");
    cmd_example->add_option("--out", out_path, "output file (default stdout)");

    CLI::App* cmd_convert = app.add_subcommand(
        "convert", "switch the sign convention of a document");
    cmd_convert->add_option("file", path, "structure document")->required();
    cmd_convert->add_option("--out", out_path, "output file (default stdout)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : DAINFTY_INPUT_ERROR;
    }

    if (app.got_subcommand(cmd_check)) {
        Family fam;
        int rc = load_family(path, fam);
        if (rc != DAINFTY_OK) return rc;
        char* report = nullptr;
        char* error = nullptr;
        rc = dainfty_check(fam.get(), u_max, v_max, &report, &error);
        return finish_check(rc, report, error, format);
    }

    if (app.got_subcommand(cmd_bidga)) {
        Family fam;
        int rc = load_family(path, fam);
        if (rc != DAINFTY_OK) return rc;
        char* report = nullptr;
        char* error = nullptr;
        rc = dainfty_check_bidga(fam.get(), &report, &error);
        return finish_check(rc, report, error, format);
    }

    if (app.got_subcommand(cmd_rep)) {
        std::string text;
        if (!read_file(path, text)) {
            std::cerr << "error: cannot read " << path << "\n";
            return DAINFTY_INPUT_ERROR;
        }
        dainfty_rep* raw = nullptr;
        char* error = nullptr;
        int rc = dainfty_rep_from_json(text.c_str(), &raw, &error);
        if (rc != DAINFTY_OK) return fail(rc, error);
        Rep rep(raw);
        char* report = nullptr;
        rc = dainfty_check_rep(rep.get(), u_max, arity_max, &report, &error);
        return finish_check(rc, report, error, format);
    }

    if (app.got_subcommand(cmd_bar)) {
        if (!cmd_bar->count("--v-max")) v_max = 4;
        Family fam;
        int rc = load_family(path, fam);
        if (rc != DAINFTY_OK) return rc;
        char* report = nullptr;
        char* error = nullptr;
        rc = dainfty_bar_check(fam.get(), u_max, v_max, &report, &error);
        return finish_check(rc, report, error, format);
    }

    if (app.got_subcommand(cmd_coop)) {
        char* out = nullptr;
        char* error = nullptr;
        int rc = dainfty_cooperad(kind.c_str(), u_arg, v_arg,
                                  format == "json" ? 1 : 0, &out, &error);
        if (rc != DAINFTY_OK) return fail(rc, error);
        CStr owned(out);
        std::cout << owned.get();
        return 0;
    }

    if (app.got_subcommand(cmd_example)) {
        dainfty_family* raw = nullptr;
        char* error = nullptr;
        int rc = dainfty_family_from_example(example_id.c_str(), arity_bound,
                                             &raw, &error);
        if (rc != DAINFTY_OK) return fail(rc, error);
        Family fam(raw);
        char* doc = nullptr;
        if (regular_rep) {
            dainfty_rep* rep_raw = nullptr;
            rc = dainfty_rep_regular(fam.get(), &rep_raw, &error);
            if (rc != DAINFTY_OK) return fail(rc, error);
            Rep rep(rep_raw);
            rc = dainfty_rep_to_json(rep.get(), &doc);
        } else {
            rc = dainfty_family_to_json(fam.get(), &doc);
        }
        if (rc != DAINFTY_OK) return fail(rc, nullptr);
        CStr owned(doc);
        return emit(owned.get(), out_path);
    }

    if (app.got_subcommand(cmd_convert)) {
        Family fam;
        int rc = load_family(path, fam);
        if (rc != DAINFTY_OK) return rc;
        dainfty_family* conv_raw = nullptr;
        char* error = nullptr;
        rc = dainfty_family_convert(fam.get(), &conv_raw, &error);
        if (rc != DAINFTY_OK) return fail(rc, error);
        Family conv(conv_raw);
        char* doc = nullptr;
        rc = dainfty_family_to_json(conv.get(), &doc);
        if (rc != DAINFTY_OK) return fail(rc, nullptr);
        CStr owned(doc);
        return emit(owned.get(), out_path);
    }

    return DAINFTY_INPUT_ERROR;
}
