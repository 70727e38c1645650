#pragma once

#include "lamis/bandit.hpp"
#include "lamis/baselines.hpp"
#include "lamis/concentration.hpp"
#include "lamis/errors.hpp"
#include "lamis/experiment.hpp"
#include "lamis/graph.hpp"
#include "lamis/instance.hpp"
#include "lamis/io.hpp"
#include "lamis/kwise_hash.hpp"
#include "lamis/mis.hpp"
#include "lamis/oracle.hpp"
#include "lamis/persistent.hpp"
#include "lamis/random.hpp"
