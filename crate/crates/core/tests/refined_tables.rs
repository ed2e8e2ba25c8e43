mod common;

use common::*;

#[test]
fn refined_arrays_match_grouped_oracle_counts() {
    refined_tables(10).unwrap();
}

#[test]
fn auxiliary_series_count_their_families() {
    auxiliary_families(9).unwrap();
}

#[test]
fn bivariate_series_match_the_eleven_two_arrays() {
    bivariate_series(2, 24).unwrap();
    bivariate_series(3, 30).unwrap();
}
