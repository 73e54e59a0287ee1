#pragma once

#include "rds/audit.hpp"
#include "rds/curvelift.hpp"
#include "rds/double_cover.hpp"
#include "rds/error.hpp"
#include "rds/generators.hpp"
#include "rds/imquad.hpp"
#include "rds/json_io.hpp"
#include "rds/planeset.hpp"
#include "rds/rational.hpp"
#include "rds/search.hpp"
#include "rds/squarefree.hpp"
#include "rds/surfacelift.hpp"
#include "rds/trivariate.hpp"
