#pragma once

#include <cmath>
#include <string>
#include <vector>

namespace farey {

// One verified identity or measurement.  `id` is the stable name surfaced by
// the command-line verification output; residual/tolerance are NaN/0 for
// checks that are exact yes/no statements.  Diagnostic rows carry values that
// are reported but can never fail a suite (quantities with no sharp
// finite-truncation contract).
struct CheckOutcome {
	std::string id;
	std::string description;
	bool pass = false;
	double residual = std::nan("");
	double tolerance = 0.0;
	std::string detail;
	bool diagnostic = false;
};

struct CheckList {
	std::string name;
	std::vector<CheckOutcome> items;

	bool all_pass() const {
		for (const auto& c : items)
			if (!c.diagnostic && !c.pass) return false;
		return true;
	}
	const CheckOutcome* find(const std::string& id) const {
		for (const auto& c : items)
			if (c.id == id) return &c;
		return nullptr;
	}
	void add(CheckOutcome c) { items.push_back(std::move(c)); }
};

}  // namespace farey
