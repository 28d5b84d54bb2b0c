import hausdorffpy.dualGroup
import hausdorffpy.hausdorff
import hausdorffpy.spectrum
from hausdorffpy.dualGroup import Character
