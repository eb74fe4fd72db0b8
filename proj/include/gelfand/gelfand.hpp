#pragma once

#include "gelfand/errors.hpp"
#include "gelfand/cyclotomic.hpp"
#include "gelfand/colored_perm.hpp"
#include "gelfand/group.hpp"
#include "gelfand/shapes_tableaux.hpp"
#include "gelfand/rs_correspondence.hpp"
#include "gelfand/conjugacy_classes.hpp"
#include "gelfand/characters.hpp"
#include "gelfand/gelfand_model.hpp"
