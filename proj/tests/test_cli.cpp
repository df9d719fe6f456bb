#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

std::string cli_path() {
    const char* path = std::getenv("SESQUI_CLI");
    REQUIRE(path != nullptr);
    return path;
}

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& command) {
    std::string wrapped = command + " 2>/dev/null";
    FILE* pipe = popen(wrapped.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    std::array<char, 4096> buffer;
    size_t got;
    while ((got = fread(buffer.data(), 1, buffer.size(), pipe)) > 0)
        output.append(buffer.data(), got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

}  // namespace

TEST_CASE("sts pipeline classifies the order-13 block graph") {
    auto cli = cli_path();
    auto result = run(cli + " sts construct 13 | " + cli + " sts blockgraph | " + cli + " classify");
    CHECK(result.exit_code == 0);
    auto j = json::parse(result.output);
    REQUIRE(j.contains("srg"));
    CHECK(j["srg"]["n"] == 26);
    CHECK(j["srg"]["k"] == 15);
    CHECK(j["srg"]["a"] == 8);
    CHECK(j["srg"]["c"] == 9);
}

TEST_CASE("gallery fig3 pipes into hoffman eigen") {
    auto cli = cli_path();
    auto result = run(cli + " gallery fig3 | " + cli + " hoffman eigen");
    CHECK(result.exit_code == 0);
    auto j = json::parse(result.output);
    CHECK(std::abs(j["lambda_min"].get<double>() + 4.0) < 1e-8);
}

TEST_CASE("cycle-complement search finds a verified representation") {
    auto cli = cli_path();
    auto result = run(cli + " construct cycle-complement 4,4 | " + cli + " rep find");
    CHECK(result.exit_code == 0);
    auto j = json::parse(result.output);
    CHECK(j["status"] == "found");
    REQUIRE(j.contains("representation"));

    // feed the outcome back into rep verify
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "sesqui_cli_test";
    fs::create_directories(dir);
    auto graph_path = (dir / "graph.json").string();
    auto outcome_path = (dir / "outcome.json").string();
    {
        auto graph = run(cli + " construct cycle-complement 4,4");
        std::ofstream(graph_path) << graph.output;
        std::ofstream(outcome_path) << result.output;
    }
    auto verify = run("cat " + outcome_path + " | " + cli + " rep verify --graph " + graph_path);
    CHECK(verify.exit_code == 0);
    CHECK(json::parse(verify.output)["pass"] == true);
}

TEST_CASE("exit codes") {
    auto cli = cli_path();
    CHECK(run(cli + " no-such-command").exit_code == 2);
    CHECK(run("echo 'not json' | " + cli + " classify").exit_code == 2);
    CHECK(run("echo '{}' | " + cli + " classify").exit_code == 2);

    // fail/exhausted style outcomes exit 1
    CHECK(run("echo '{\"v\":4,\"blocks\":[[0,1,2],[0,1,3]]}' | " + cli + " sts verify")
              .exit_code == 1);
}

TEST_CASE("deterministic output and certificates") {
    auto cli = cli_path();
    auto first = run(cli + " sts construct 9 | " + cli + " sts blockgraph | " + cli + " spectrum");
    auto second = run(cli + " sts construct 9 | " + cli + " sts blockgraph | " + cli + " spectrum");
    CHECK(first.output == second.output);

    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "sesqui_cert_test";
    fs::remove_all(dir);
    auto cmd = cli + " sts construct 9 | " + cli + " sts blockgraph | " + cli +
               " classify --out " + dir.string() + " --no-timestamp";
    run(cmd);
    int count = 0;
    std::string cert_path;
    for (const auto& entry : fs::directory_iterator(dir)) {
        ++count;
        cert_path = entry.path().string();
    }
    REQUIRE(count == 1);
    std::ifstream in(cert_path);
    json cert = json::parse(in);
    CHECK(cert.contains("subject"));
    CHECK(cert["claims"][0]["verdict"] == "pass");
    CHECK_FALSE(cert.contains("timestamp"));
    std::string first_bytes((std::istreambuf_iterator<char>(std::ifstream(cert_path).rdbuf())),
                            std::istreambuf_iterator<char>());

    // writing again yields identical bytes
    run(cmd);
    std::string second_bytes((std::istreambuf_iterator<char>(std::ifstream(cert_path).rdbuf())),
                             std::istreambuf_iterator<char>());
    CHECK(first_bytes == second_bytes);
}

TEST_CASE("reconstruct-sts round trips through the CLI") {
    auto cli = cli_path();
    namespace fs = std::filesystem;
    auto dir = fs::temp_directory_path() / "sesqui_rec_test";
    fs::create_directories(dir);
    auto graph_path = (dir / "bg13.json").string();
    run(cli + " sts construct 13 | " + cli + " sts blockgraph > " + graph_path);

    // canonical representation straight from the triple system blocks
    auto sys_out = run(cli + " sts construct 13");
    auto sys = json::parse(sys_out.output);
    json vectors = json::object();
    int index = 0;
    for (const auto& block : sys["blocks"]) {
        std::vector<long long> vec(13, 0);
        for (int p : block) vec[p] = 1;
        vectors[std::to_string(index++)] = vec;
    }
    json rep{{"s", 1}, {"dimension", 13}, {"vectors", vectors}};
    auto rep_path = (dir / "rep13.json").string();
    std::ofstream(rep_path) << rep.dump();

    auto rebuilt = run("cat " + rep_path + " | " + cli + " rep reconstruct-sts --graph " + graph_path);
    CHECK(rebuilt.exit_code == 0);
    auto rebuilt_sys = json::parse(rebuilt.output);
    CHECK(rebuilt_sys["v"] == 13);
    CHECK(rebuilt_sys["blocks"] == sys["blocks"]);
}

TEST_CASE("accept filter runs a single criterion") {
    auto cli = cli_path();
    auto result = run(cli + " accept --filter steiner");
    CHECK(result.exit_code == 0);
    auto j = json::parse(result.output);
    REQUIRE(j.size() == 1);
    CHECK(j[0]["name"] == "2-steiner-witness-pipeline");
    CHECK(j[0]["pass"] == true);
}

TEST_CASE("dot export") {
    auto cli = cli_path();
    auto result = run(cli + " construct cube 3 --format dot");
    CHECK(result.exit_code == 0);
    CHECK(result.output.rfind("graph g {", 0) == 0);
}
