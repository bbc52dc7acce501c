# application/services/presentation_service.py
import logging

from domain.algebra.presentation_analysis import abelianization, analyze_one_relator, zero_exponent_rewrite
from domain.entities.presentation import AbelianInvariants, OneRelatorVerdict, Presentation
from domain.services.IPresentationService import IPresentationService
from domain.services.rop_service import ROPService
from domain.utils.result import Result
from infrastructure.parsers.presentation_parser import parse_presentation


class PresentationService(IPresentationService):
    """Text in, Result out: parse then run one presentation_analysis operation"""

    def __init__(self):
        self.rop_service = ROPService()
        self.logger = logging.getLogger(__name__)

    def parse(self, text: str) -> Result[Presentation, str]:
        return self.rop_service.pipeline(
            self.rop_service.validate(lambda t: len(t.strip()) > 0, "Presentation text is empty"),
            self.rop_service.try_catch(parse_presentation),
        )(text)

    def abelianize(self, text: str) -> Result[AbelianInvariants, str]:
        return self.parse(text).bind(self.rop_service.try_catch(abelianization))

    def rewrite(self, text: str) -> Result[Presentation, str]:
        return self.parse(text).bind(self.rop_service.try_catch(zero_exponent_rewrite))

    def analyze(self, text: str) -> Result[OneRelatorVerdict, str]:
        return self.parse(text).bind(self.analyze_presentation)

    def analyze_presentation(self, presentation: Presentation) -> Result[OneRelatorVerdict, str]:
        result = self.rop_service.try_catch(analyze_one_relator)(presentation)
        if result.is_success:
            self.logger.debug("Verdict %s for %s", result.value.classification.value, presentation)
        return result
