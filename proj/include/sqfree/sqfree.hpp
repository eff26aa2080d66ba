#pragma once

#include "sqfree/audit.hpp"
#include "sqfree/budget.hpp"
#include "sqfree/graph.hpp"
#include "sqfree/mina.hpp"
#include "sqfree/partition.hpp"
#include "sqfree/structure.hpp"
#include "sqfree/word.hpp"
