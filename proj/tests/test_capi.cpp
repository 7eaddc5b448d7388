// Exercises the shared library through its C header only.
#include <doctest.h>

#include <cstring>
#include <string>

#include "dvbp/dvbp.h"

namespace {

const char* kTwoItems =
    "id,arrival,departure,s1\n"
    "1,0,2,3/5\n"
    "2,1,2,3/5\n";

}  // namespace

TEST_CASE("instance, simulate, audit") {
    dvbp_instance* inst = nullptr;
    REQUIRE(dvbp_instance_parse(kTwoItems, &inst) == DVBP_OK);
    CHECK(dvbp_instance_item_count(inst) == 2);
    CHECK(dvbp_instance_dimension(inst) == 1);
    CHECK(std::string(dvbp_instance_span(inst)) == "2");
    CHECK(std::string(dvbp_instance_mu(inst)) == "2");

    dvbp_trace* trace = nullptr;
    REQUIRE(dvbp_simulate(inst, "ff", 0, &trace) == DVBP_OK);
    CHECK(std::string(dvbp_trace_cost(trace)) == "3");
    CHECK(dvbp_trace_bin_count(trace) == 2);
    CHECK(dvbp_trace_bin_of(trace, 2) == 2);
    CHECK(dvbp_trace_bin_of(trace, 99) == 0);
    CHECK(std::string(dvbp_trace_policy(trace)) == "ff");

    dvbp_trace* copy = nullptr;
    REQUIRE(dvbp_trace_parse(dvbp_trace_text(trace), &copy) == DVBP_OK);
    CHECK(std::string(dvbp_trace_text(copy)) == dvbp_trace_text(trace));

    dvbp_audit* audit = nullptr;
    REQUIRE(dvbp_audit_run(inst, copy, &audit) == DVBP_OK);
    CHECK(dvbp_audit_violation_count(audit) == 0);
    CHECK(dvbp_audit_violation(audit, 0) == nullptr);

    dvbp_audit_free(audit);
    dvbp_trace_free(copy);
    dvbp_trace_free(trace);
    dvbp_instance_free(inst);
}

TEST_CASE("errors carry a status and a message") {
    dvbp_instance* inst = nullptr;
    CHECK(dvbp_instance_parse("", &inst) == DVBP_ERR_PARSE);
    CHECK(inst == nullptr);
    CHECK(std::strlen(dvbp_last_error()) > 0);

    CHECK(dvbp_instance_read_file("/nonexistent/dir/x.csv", &inst) == DVBP_ERR_IO);
    CHECK(std::string(dvbp_last_error()).find("/nonexistent/dir/x.csv") != std::string::npos);

    REQUIRE(dvbp_instance_parse(kTwoItems, &inst) == DVBP_OK);
    dvbp_trace* trace = nullptr;
    CHECK(dvbp_simulate(inst, "nope", 0, &trace) == DVBP_ERR_USAGE);
    CHECK(dvbp_simulate(nullptr, "ff", 0, &trace) == DVBP_ERR_USAGE);
    dvbp_instance_free(inst);
    CHECK(std::string(dvbp_status_name(DVBP_ERR_ORACLE_LIMIT)) == "oracle limit");
}

TEST_CASE("bounds through the C API") {
    dvbp_instance* inst = nullptr;
    REQUIRE(dvbp_instance_parse(kTwoItems, &inst) == DVBP_OK);
    dvbp_bounds* b = nullptr;
    REQUIRE(dvbp_bounds_compute(inst, 1, 0, &b) == DVBP_OK);
    CHECK(std::string(dvbp_bounds_lb_span(b)) == "2");
    CHECK(std::string(dvbp_bounds_lb_util(b)) == "9/5");
    CHECK(std::string(dvbp_bounds_lb_height(b)) == "3");
    CHECK(std::string(dvbp_bounds_opt_exact(b)) == "3");

    size_t needed = 0;
    char small[4];
    CHECK(dvbp_bounds_csv_row(b, "row", small, sizeof small, &needed) == DVBP_ERR_USAGE);
    CHECK(needed == std::strlen("row,2,9/5,3,3"));
    std::string buf(needed + 1, '\0');
    REQUIRE(dvbp_bounds_csv_row(b, "row", buf.data(), buf.size(), &needed) == DVBP_OK);
    CHECK(std::string(buf.c_str()) == "row,2,9/5,3,3");
    dvbp_bounds_free(b);

    REQUIRE(dvbp_bounds_compute(inst, 1, 1, &b) == DVBP_ERR_ORACLE_LIMIT);
    dvbp_instance_free(inst);
}

TEST_CASE("adversarial through the C API") {
    dvbp_adversarial_params p{};
    p.family = "nextfit";
    p.d = 1;
    p.k = 4;
    p.mu = "2";
    dvbp_adversarial* adv = nullptr;
    REQUIRE(dvbp_adversarial_generate(&p, &adv) == DVBP_OK);
    CHECK(std::string(dvbp_adversarial_predicted_ratio(adv)) == "2");
    CHECK(std::string(dvbp_adversarial_epsilon_prime(adv)) == "1/8");
    CHECK(dvbp_adversarial_predicted_bins(adv) == 4);
    const dvbp_instance* inst = dvbp_adversarial_instance(adv);
    CHECK(dvbp_instance_item_count(inst) == 8);
    dvbp_trace* t = nullptr;
    REQUIRE(dvbp_simulate(inst, "nf", 0, &t) == DVBP_OK);
    CHECK(std::string(dvbp_trace_cost(t)) == "8");
    dvbp_trace_free(t);
    dvbp_adversarial_free(adv);

    p.k = 3;
    CHECK(dvbp_adversarial_generate(&p, &adv) == DVBP_ERR_CONSTRAINT);
    CHECK(std::string(dvbp_last_error()).find("k must be even") != std::string::npos);
}

TEST_CASE("rational helpers") {
    int cmp = 0;
    REQUIRE(dvbp_rational_compare("1/3", "0.25", &cmp) == DVBP_OK);
    CHECK(cmp == 1);
    char buf[32];
    size_t needed = 0;
    REQUIRE(dvbp_rational_div("3", "6/5", buf, sizeof buf, &needed) == DVBP_OK);
    CHECK(std::string(buf) == "5/2");
    CHECK(dvbp_rational_div("1", "0", buf, sizeof buf, &needed) != DVBP_OK);
}
