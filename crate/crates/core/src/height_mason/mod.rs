//! Heights of rational functions, Mason's inequality, the classification of
//! Laurent pairs with `A^3 - B^2` a unit, and an exhaustive root-search
//! oracle for the polynomial equations behind the characteristic-p case.

mod height;
mod mason;
mod root_search;
mod unit_difference;

pub use height::{height, height_by_places};
pub use mason::{mason_check, mason_check_with_places, Exemption, MasonTriple, MasonVerdict};
pub use root_search::{root_search, RootSearchOutcome, RootSearchParams, ROOT_SEARCH_CAP};
pub use unit_difference::{
    classify_unit_difference, unit_difference_exhaustive, UnitDifferenceClass,
    UnitDifferenceSummary,
};
