//! The calculus of V and BV in the generators `v_n`, `π_n`, `π̄_n`.
//!
//! Relation families, the actions of `v` letters on π and π̄ words, heights,
//! the `L · M · R` forms and the word-problem decider built on them. None of
//! this goes through the hat groups; the hat groups serve as the test oracle.

pub mod actions;
pub mod forms;
pub mod height;
pub mod relations;

pub use actions::{move_v_inverse_right, move_v_left, opi_commute, pi_action, Side};
pub use forms::{
    equal_bv, is_trivial_bv, is_trivial_bv_with, m_to_sigma, to_first_form, to_first_form_with,
    to_second_form_with, to_third_form, to_third_form_with, FirstForm, LmrForm,
    DEFAULT_BV_STEP_CAP,
};
pub use height::{
    height_step, l_height_bound, l_height_witness, mono_raise, raise_m, raise_word_heights,
    split_monosyllables, HeightSet, MonoOp, MonoRaise, Monosyllable,
};
pub use relations::{apply_relation, BvFamily, BvMode, BvRelation, Direction};
