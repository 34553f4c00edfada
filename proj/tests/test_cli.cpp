#include <doctest.h>

#include <sys/wait.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
};

CmdResult run_cli(const std::string& args) {
    const std::string cmd = std::string(SADIC_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    CmdResult r;
    char buf[4096];
    std::size_t n = 0;
    while ((n = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, n);
    const int status = pclose(pipe);
    r.code = WEXITSTATUS(status);
    return r;
}

std::string sys_path(const char* name) {
    return std::string(SADIC_SYSTEMS_DIR) + "/" + name;
}

std::filesystem::path write_temp(const char* name, const std::string& contents) {
    auto path = std::filesystem::temp_directory_path() / name;
    std::ofstream out(path, std::ios::binary);
    out << contents;
    return path;
}

} // namespace

TEST_CASE("gen prints the iterate") {
    auto r = run_cli("gen --system " + sys_path("ex1.json") + " --level 1 --letter b");
    CHECK(r.code == 0);
    CHECK(r.out == "oooo\noooo\noooo\nbooo\n");
}

TEST_CASE("gen output is byte-identical across runs") {
    const std::string args = "gen --system " + sys_path("ex3.json") + " --level 2 --letter b";
    auto first = run_cli(args);
    auto second = run_cli(args);
    CHECK(first.code == 0);
    CHECK(first.out == second.out);
}

TEST_CASE("check-compat verdicts and exit codes") {
    auto p = write_temp("sadic_cli_p.txt", "obbb\nbboo\n");
    const std::string base = "check-compat --system " + sys_path("ex3.json") + " --pattern " +
                             p.string();

    auto ok = run_cli(base + " --subs \"a a b a / c c d c\"");
    CHECK(ok.code == 0);
    CHECK(ok.out == "compatible\n");

    auto bad = run_cli(base + " --subs \"a a b a / c c d a\"");
    CHECK(bad.code == 1);
    CHECK(bad.out == "incompatible\n");

    auto uniform = run_cli(base + " --sub a");
    CHECK(uniform.code == 0);
}

TEST_CASE("recover round trips the sample sequence") {
    auto r = run_cli("recover --system " + sys_path("ex3.json") +
                     " --samples-from-seq \"d,c,a\" --depth 3 --letter b");
    CHECK(r.code == 0);
    CHECK(r.out == "d c a\n");
}

TEST_CASE("parse prints results or reports unparseable") {
    auto good = write_temp("sadic_cli_s2b.txt", "oooo\noooo\noooo\nbooo\n");
    auto r = run_cli("parse --system " + sys_path("ex1.json") + " --pattern " + good.string());
    CHECK(r.code == 0);
    CHECK(r.out.find("s offset=(0,0) cropped=false") != std::string::npos);
    CHECK(r.out.find("oo\nbo") != std::string::npos);

    auto bad = write_temp("sadic_cli_bad.txt", "bbb\nbbb\n");
    auto u = run_cli("parse --system " + sys_path("ex1.json") + " --pattern " + bad.string());
    CHECK(u.code == 1);
    CHECK(u.out == "unparseable\n");
}

TEST_CASE("lang and global-lang print canonical blocks") {
    auto local = run_cli("lang --system " + sys_path("ex1.json") + " --level 2 --window 2x2");
    CHECK(local.code == 0);
    CHECK(local.out == "oo\noo\n\noo\nbo\n");

    auto global = run_cli("global-lang --system " + sys_path("ex1.json") +
                          " --level 2 --window 2x2 --mode seq");
    CHECK(global.code == 0);
    CHECK(global.out.find("ob\noo") != std::string::npos);
}

TEST_CASE("spatterns prints the exact level") {
    auto r = run_cli("spatterns --system " + sys_path("ex1.json") + " --level 1");
    CHECK(r.code == 0);
    CHECK(r.out == "oo\noo\n\noo\nbo\n");
}

TEST_CASE("history words and synchronization round trip") {
    auto word = run_cli("history --system " + sys_path("ruler3.json") + " --level 2 --letter b");
    CHECK(word.code == 0);
    CHECK(word.out == "u v u w u v u w\n");

    auto emitted = run_cli("history --system " + sys_path("ruler3.json") +
                           " --level 1 --letter b --emit-pattern");
    CHECK(emitted.code == 0);
    auto dp = write_temp("sadic_cli_dec.txt", emitted.out);
    auto sync = run_cli("check-sync --system " + sys_path("ruler3.json") + " --pattern " +
                        dp.string());
    CHECK(sync.code == 0);
    CHECK(sync.out == "synchronized\n");

    // swapping one cell's V decoration breaks a column
    std::string tampered = emitted.out;
    auto pos = tampered.find("o:u:");
    REQUIRE(pos != std::string::npos);
    tampered[pos + 2] = 'v';
    auto dp2 = write_temp("sadic_cli_dec2.txt", tampered);
    auto bad = run_cli("check-sync --system " + sys_path("ruler3.json") + " --pattern " +
                       dp2.string());
    CHECK(bad.code == 1);
    CHECK(bad.out == "not synchronized\n");
}

TEST_CASE("check-propa") {
    auto ex3 = run_cli("check-propa --system " + sys_path("ex3.json"));
    CHECK(ex3.code == 0);
    CHECK(ex3.out == "holds-uniform-support\n");

    auto ex1 = run_cli("check-propa --system " + sys_path("ex1.json"));
    CHECK(ex1.code == 0);
    CHECK(ex1.out == "holds-singleton\n");

    auto bounded = run_cli("check-propa --system " + sys_path("ex1.json") +
                           " --mode bounded --level 2 --depth 1");
    CHECK(bounded.code == 0);
    CHECK(bounded.out == "no-counterexample-up-to-bounds\n");
}

TEST_CASE("render produces the promised bytes") {
    auto ascii = run_cli("render --system " + sys_path("ex1.json") +
                         " --level 1 --letter b --format ascii");
    CHECK(ascii.code == 0);
    CHECK(ascii.out == "oooo\noooo\noooo\nbooo\n");

    auto out = std::filesystem::temp_directory_path() / "sadic_cli_render.ppm";
    auto ppm = run_cli("render --system " + sys_path("ex1.json") +
                       " --level 1 --letter b --format ppm --out " + out.string());
    CHECK(ppm.code == 0);
    std::ifstream in(out, std::ios::binary);
    std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    const std::string header = "P6\n4 4\n255\n";
    REQUIRE(bytes.size() == header.size() + 48);
    CHECK(bytes.compare(0, header.size(), header) == 0);

    auto under = run_cli("render --system " + sys_path("ex1.json") +
                         " --level 1 --letter b --palette 000000");
    CHECK(under.code == 1);
}

TEST_CASE("decorate prints lifted rules") {
    auto r = run_cli("decorate --system " + sys_path("ex1.json") + " --sub s");
    CHECK(r.code == 0);
    CHECK(r.out.find("s~ (o,s,s) ->") != std::string::npos);
    CHECK(r.out.find("b:s:s o:s:s") != std::string::npos);
}

TEST_CASE("usage and file errors exit 2") {
    CHECK(run_cli("no-such-command").code == 2);
    CHECK(run_cli("gen --level 0 --letter b --system /no/such/file.json").code == 2);
    CHECK(run_cli("gen --system " + sys_path("ex1.json") + " --level 1 --letter zz").code == 2);
    CHECK(run_cli("--help").code == 0);
}
