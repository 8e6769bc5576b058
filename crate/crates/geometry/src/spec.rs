use crate::GeometryError;
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Which side of a component the elastic body lies on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Orientation {
    /// The body is inside the component; the normal is the geometric outward normal.
    #[default]
    Outer,
    /// The component bounds a hole in the body; the normal points into the hole.
    Cavity,
}

/// Declarative surface description.
///
/// JSON form (unknown keys are rejected):
/// `{"kind":"sphere","radius":1.0}`,
/// `{"kind":"ellipsoid","semiaxes":[a,b,c]}`,
/// `{"kind":"torus","R":2.0,"r":1.0}`,
/// `{"kind":"cylinder_patch","radius":1.0,"length":2.0}`,
/// `{"kind":"union","components":[{"kind":"sphere","radius":2.0,"orientation":"outer"}, …]}`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case", deny_unknown_fields)]
pub enum SurfaceSpec {
    /// Sphere of the given radius centred at the origin.
    Sphere {
        /// Radius (> 0).
        radius: f64,
    },
    /// Axis-aligned ellipsoid centred at the origin.
    Ellipsoid {
        /// Semi-axes (a, b, c), all > 0.
        semiaxes: [f64; 3],
    },
    /// Torus of revolution about the x₃ axis.
    Torus {
        /// Distance from the axis to the tube centre.
        #[serde(rename = "R")]
        major: f64,
        /// Tube radius (< `major`).
        #[serde(rename = "r")]
        minor: f64,
    },
    /// Open circular cylinder `{x₁² + x₂² = radius², |x₃| ≤ length/2}`.
    #[serde(alias = "cylinder-patch")]
    CylinderPatch {
        /// Radius (> 0).
        radius: f64,
        /// Axial length (> 0).
        length: f64,
    },
    /// Disjoint union of closed components (disjointness is not checked).
    Union {
        /// The components.
        components: Vec<ComponentSpec>,
    },
}

/// One component of a union: a primitive surface plus its orientation.
///
/// Serialized flat: the orientation key sits next to `kind`.
#[derive(Clone, Debug, PartialEq)]
pub struct ComponentSpec {
    /// The component surface; must be a closed primitive.
    pub surface: SurfaceSpec,
    /// Body side; defaults to [`Orientation::Outer`] when omitted.
    pub orientation: Orientation,
}

impl Serialize for ComponentSpec {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        let mut v = serde_json::to_value(&self.surface).map_err(serde::ser::Error::custom)?;
        let o = serde_json::to_value(self.orientation).map_err(serde::ser::Error::custom)?;
        match v.as_object_mut() {
            Some(map) => {
                map.insert("orientation".into(), o);
            }
            None => return Err(serde::ser::Error::custom("surface did not serialize to an object")),
        }
        v.serialize(s)
    }
}

impl<'de> Deserialize<'de> for ComponentSpec {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let mut v = serde_json::Value::deserialize(d)?;
        let map = v
            .as_object_mut()
            .ok_or_else(|| D::Error::custom("union component must be an object"))?;
        let orientation = match map.remove("orientation") {
            Some(o) => Orientation::deserialize(o).map_err(D::Error::custom)?,
            None => Orientation::Outer,
        };
        let surface = SurfaceSpec::deserialize(v).map_err(D::Error::custom)?;
        Ok(ComponentSpec { surface, orientation })
    }
}

fn positive(name: &str, x: f64) -> Result<(), GeometryError> {
    if x.is_finite() && x > 0.0 {
        Ok(())
    } else {
        Err(GeometryError::InvalidParameter { constraint: format!("{name} must be finite and > 0 (got {x})") })
    }
}

impl SurfaceSpec {
    /// Parses the JSON form.
    pub fn from_json(text: &str) -> Result<Self, GeometryError> {
        serde_json::from_str(text).map_err(|e| GeometryError::Json(e.to_string()))
    }

    /// Serializes to compact JSON.
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("surface specs always serialize")
    }

    /// Checks every size constraint.
    pub fn validate(&self) -> Result<(), GeometryError> {
        match self {
            SurfaceSpec::Sphere { radius } => positive("sphere radius", *radius),
            SurfaceSpec::Ellipsoid { semiaxes } => {
                for (k, a) in semiaxes.iter().enumerate() {
                    positive(&format!("ellipsoid semi-axis {k}"), *a)?;
                }
                Ok(())
            }
            SurfaceSpec::Torus { major, minor } => {
                positive("torus R", *major)?;
                positive("torus r", *minor)?;
                if major <= minor {
                    return Err(GeometryError::InvalidParameter {
                        constraint: format!("torus requires R > r (got R = {major}, r = {minor})"),
                    });
                }
                Ok(())
            }
            SurfaceSpec::CylinderPatch { radius, length } => {
                positive("cylinder radius", *radius)?;
                positive("cylinder length", *length)
            }
            SurfaceSpec::Union { components } => {
                if components.is_empty() {
                    return Err(GeometryError::InvalidParameter {
                        constraint: "union needs at least one component".into(),
                    });
                }
                for c in components {
                    match c.surface {
                        SurfaceSpec::Union { .. } => {
                            return Err(GeometryError::InvalidParameter {
                                constraint: "union components cannot themselves be unions".into(),
                            })
                        }
                        SurfaceSpec::CylinderPatch { .. } => {
                            return Err(GeometryError::InvalidParameter {
                                constraint: "union components must be closed surfaces".into(),
                            })
                        }
                        _ => c.surface.validate()?,
                    }
                }
                Ok(())
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_documented_forms() {
        assert_eq!(SurfaceSpec::from_json(r#"{"kind":"sphere","radius":1.0}"#).unwrap(), SurfaceSpec::Sphere { radius: 1.0 });
        assert_eq!(
            SurfaceSpec::from_json(r#"{"kind":"torus","R":2.0,"r":1.0}"#).unwrap(),
            SurfaceSpec::Torus { major: 2.0, minor: 1.0 }
        );
        let u = SurfaceSpec::from_json(
            r#"{"kind":"union","components":[{"kind":"sphere","radius":2.0,"orientation":"outer"},{"kind":"sphere","radius":1.0,"orientation":"cavity"}]}"#,
        )
        .unwrap();
        match &u {
            SurfaceSpec::Union { components } => {
                assert_eq!(components.len(), 2);
                assert_eq!(components[1].orientation, Orientation::Cavity);
            }
            _ => panic!("expected union"),
        }
        assert_eq!(SurfaceSpec::from_json(&u.to_json()).unwrap(), u);
    }

    #[test]
    fn rejects_unknown_keys() {
        assert!(SurfaceSpec::from_json(r#"{"kind":"sphere","radius":1.0,"centre":[0,0,0]}"#).is_err());
        assert!(SurfaceSpec::from_json(
            r#"{"kind":"union","components":[{"kind":"sphere","radius":1.0,"colour":"red"}]}"#
        )
        .is_err());
        assert!(SurfaceSpec::from_json(r#"{"kind":"cube","side":1.0}"#).is_err());
    }

    #[test]
    fn validation_names_constraint() {
        let e = SurfaceSpec::Torus { major: 1.0, minor: 2.0 }.validate().unwrap_err();
        assert!(e.to_string().contains("R > r"));
        assert!(SurfaceSpec::Sphere { radius: -1.0 }.validate().is_err());
        assert!(SurfaceSpec::Ellipsoid { semiaxes: [1.0, 0.0, 1.0] }.validate().is_err());
    }
}
