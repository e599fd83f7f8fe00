#include <CLI11.hpp>

#include <cstdint>
#include <string>

#include "asymspace/io.hpp"

int main(int argc, char** argv) {
    CLI::App app{"asymspace - exact toolkit for asymmetric normed spaces"};

    std::string task_file;
    std::string format = "text";
    asymspace::TaskOptions opt;

    app.add_option("task-file", task_file, "JSON task document")->required();
    app.add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--out", opt.out_path, "write the report (or geometry prefix) here instead of stdout");
    app.add_option("--digits", opt.digits, "decimal digits for geometry output")->check(CLI::Range(1, 60));
    app.add_option("--seed", opt.seed, "seed for sampled verifications");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    opt.format = format == "json" ? asymspace::TaskOptions::Format::json : asymspace::TaskOptions::Format::text;
    return asymspace::run_task_file(task_file, opt);
}
