#pragma once

#include "ltsconf/aut.hpp"
#include "ltsconf/conflict_detect.hpp"
#include "ltsconf/conflict_resolve.hpp"
#include "ltsconf/critical_pair.hpp"
#include "ltsconf/error.hpp"
#include "ltsconf/label.hpp"
#include "ltsconf/lts.hpp"
#include "ltsconf/matching.hpp"
#include "ltsconf/oracle.hpp"
#include "ltsconf/report.hpp"
#include "ltsconf/rule_format.hpp"
#include "ltsconf/rules.hpp"
#include "ltsconf/transform.hpp"
